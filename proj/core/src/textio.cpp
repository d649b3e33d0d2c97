#include "folcheck/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace folcheck {

const char* toString(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kVerified: return "verified";
    case ClaimStatus::kRefuted: return "refuted";
    case ClaimStatus::kInconclusive: return "inconclusive";
    case ClaimStatus::kErratum: return "erratum";
  }
  return "?";
}

namespace {

std::string describeError(const std::string& message, int line, int column, const std::vector<std::string>& expected) {
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : std::invalid_argument(describeError(message, line, column, expected)),
      message_(message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kInt, kVar, kDiff, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kComma, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int index = 0;  // variable index for kVar / kDiff
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipSpace();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += take();
        t.kind = Tok::kInt;
      } else if (c == 'z' && isDigitAt(pos_ + 1)) {
        take();
        t.text = std::string("z") + text_[pos_];
        t.index = take() - '1';
        t.kind = Tok::kVar;
      } else if (c == 'd' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'z' && isDigitAt(pos_ + 2)) {
        take();
        take();
        t.text = std::string("dz") + text_[pos_];
        t.index = take() - '1';
        t.kind = Tok::kDiff;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) t.text += take();
        t.kind = Tok::kIdent;
      } else {
        t.text = std::string(1, take());
        switch (c) {
          case '+': t.kind = Tok::kPlus; break;
          case '-': t.kind = Tok::kMinus; break;
          case '*': t.kind = Tok::kStar; break;
          case '/': t.kind = Tok::kSlash; break;
          case '^': t.kind = Tok::kCaret; break;
          case '(': t.kind = Tok::kLParen; break;
          case ')': t.kind = Tok::kRParen; break;
          case ',': t.kind = Tok::kComma; break;
          default:
            throw ParseError("unexpected character '" + t.text + "'", t.line, t.column);
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool isDigitAt(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// A parsed subexpression: either a function (0-form) or a 1-form.
struct Value {
  Polynomial function;
  std::optional<OneForm> form;
};

class Parser {
 public:
  Parser(std::string_view text, int ambient, bool allowForms)
      : tokens_(Lexer(text).run()), ambient_(ambient), allowForms_(allowForms) {
    if (ambient < 1 || ambient > 6) throw std::invalid_argument("ambient must be between 1 and 6");
  }

  Value parseExpression() {
    Value v = expr();
    expect(Tok::kEnd, {"operator", "end of input"});
    return v;
  }

  Ideal parseIdealExpression() {
    Ideal out = idealTerm();
    expect(Tok::kEnd, {"end of input"});
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const std::string& message, const Token& at, std::vector<std::string> expected = {}) const {
    throw ParseError(message, at.line, at.column, std::move(expected));
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::kEnd ? std::string("end of input") : "'" + t.text + "'";
  }

  const Token& expect(Tok kind, std::vector<std::string> expected) {
    if (peek().kind != kind) fail("unexpected " + describe(peek()), peek(), std::move(expected));
    return advance();
  }

  Value expr() {
    bool negate = false;
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) negate = advance().kind == Tok::kMinus;
    Value acc = term();
    if (negate) scale(acc, -1);
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token& op = advance();
      Value rhs = term();
      if (op.kind == Tok::kMinus) scale(rhs, -1);
      add(acc, rhs, op);
    }
    return acc;
  }

  static bool startsFactor(Tok kind) {
    return kind == Tok::kInt || kind == Tok::kVar || kind == Tok::kDiff || kind == Tok::kLParen;
  }

  Value term() {
    Value acc = factor();
    while (true) {
      const Token& next = peek();
      if (next.kind == Tok::kStar) {
        advance();
      } else if (!startsFactor(next.kind)) {
        return acc;
      }
      const Token& at = peek();
      Value rhs = factor();
      multiply(acc, rhs, at);
    }
  }

  Value factor() {
    const Token start = peek();
    Value base = primary();
    if (peek().kind != Tok::kCaret) return base;
    advance();
    const Token& exponentToken = expect(Tok::kInt, {"exponent"});
    if (base.form) fail("a 1-form cannot be raised to a power", start);
    const unsigned long exponent = smallNatural(exponentToken);
    try {
      base.function = base.function.pow(static_cast<unsigned>(exponent));
    } catch (const std::overflow_error&) {
      fail("exponent overflow", exponentToken);
    }
    if (peek().kind == Tok::kCaret) fail("chained powers need parentheses", peek());
    return base;
  }

  unsigned long smallNatural(const Token& t) const {
    if (t.text.size() > 5 || std::stoul(t.text) > std::numeric_limits<Exponent>::max()) fail("exponent overflow", t);
    return std::stoul(t.text);
  }

  Value primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt: {
        advance();
        Scalar value(Integer(t.text));
        if (peek().kind == Tok::kSlash) {
          advance();
          const Token& den = expect(Tok::kInt, {"denominator"});
          Integer d(den.text);
          if (d == 0) fail("zero denominator", den);
          value /= Scalar(d);
        }
        return {Polynomial::constant(ambient_, value), std::nullopt};
      }
      case Tok::kVar: {
        advance();
        if (t.index < 0 || t.index >= ambient_) {
          fail("variable " + t.text + " outside the " + std::to_string(ambient_) + "-variable ring", t);
        }
        return {Polynomial::variable(ambient_, t.index), std::nullopt};
      }
      case Tok::kDiff: {
        advance();
        if (!allowForms_) fail("differential " + t.text + " in a polynomial", t);
        if (t.index < 0 || t.index >= ambient_) {
          fail("differential " + t.text + " outside the " + std::to_string(ambient_) + "-variable ring", t);
        }
        return {Polynomial(ambient_), OneForm::basis(ambient_, t.index)};
      }
      case Tok::kLParen: {
        advance();
        Value inner = expr();
        expect(Tok::kRParen, {"')'", "operator"});
        return inner;
      }
      default:
        fail("unexpected " + describe(t), t, {"number", "variable", allowForms_ ? "differential" : "'('", "'('"});
    }
  }

  static void scale(Value& v, const Scalar& c) {
    if (v.form) {
      *v.form *= c;
    } else {
      v.function *= c;
    }
  }

  void add(Value& acc, Value& rhs, const Token& op) const {
    if (acc.form && rhs.form) {
      *acc.form += *rhs.form;
    } else if (!acc.form && !rhs.form) {
      acc.function += rhs.function;
    } else if (acc.form && rhs.function.isZero()) {
      // adding 0 leaves the form alone
    } else if (rhs.form && acc.function.isZero()) {
      acc = std::move(rhs);
    } else {
      fail("cannot add a function and a 1-form", op);
    }
  }

  void multiply(Value& acc, Value& rhs, const Token& at) const {
    if (acc.form && rhs.form) fail("product of two 1-forms is not a 1-form", at);
    try {
      if (acc.form) {
        *acc.form *= rhs.function;
      } else if (rhs.form) {
        *rhs.form *= acc.function;
        acc = std::move(rhs);
      } else {
        acc.function *= rhs.function;
      }
    } catch (const std::overflow_error&) {
      fail("exponent overflow", at);
    }
  }

  Ideal idealTerm() {
    const Token& head = expect(Tok::kIdent, {"'ideal'", "'union'"});
    if (head.text != "ideal" && head.text != "union") fail("unknown constructor '" + head.text + "'", head, {"'ideal'", "'union'"});
    expect(Tok::kLParen, {"'('"});
    if (head.text == "ideal") {
      std::vector<Polynomial> gens;
      if (peek().kind != Tok::kRParen) {
        while (true) {
          const Token& at = peek();
          Value v = expr();
          if (v.form) fail("ideal generators must be polynomials", at);
          gens.push_back(std::move(v.function));
          if (peek().kind != Tok::kComma) break;
          advance();
        }
      }
      expect(Tok::kRParen, {"','", "')'"});
      return Ideal(ambient_, std::move(gens));
    }
    std::optional<Ideal> product;
    while (true) {
      Ideal member = idealTerm();
      product = product ? idealProduct(*product, member) : member;
      if (peek().kind != Tok::kComma) break;
      advance();
    }
    expect(Tok::kRParen, {"','", "')'"});
    return *product;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int ambient_;
  bool allowForms_;
};

std::string monomialText(const Monomial& m, int ambient) {
  std::string out;
  for (int i = 0; i < ambient; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'z' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string wrap(const Polynomial& p) { return "(" + printCanonical(p) + ")"; }

}  // namespace

Polynomial parsePolynomial(std::string_view text, int ambient) {
  Parser parser(text, ambient, false);
  return parser.parseExpression().function;
}

OneForm parseOneForm(std::string_view text, int ambient) {
  Parser parser(text, ambient, true);
  Value v = parser.parseExpression();
  if (v.form) return *v.form;
  if (v.function.isZero()) return OneForm(ambient);
  throw ParseError("expected a 1-form but the expression has no differential", 1, 1);
}

Ideal parseIdeal(std::string_view text, int ambient) {
  Parser parser(text, ambient, false);
  return parser.parseIdealExpression();
}

std::string printCanonical(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar magnitude = abs(c);
    const std::string mono = monomialText(m, p.ambient());
    if (mono.empty()) {
      out += toString(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += toString(magnitude) + '*' + mono;
    }
  }
  return out;
}

std::string printCanonical(const OneForm& form) {
  std::string out;
  for (int i = 0; i < form.ambient(); ++i) {
    if (form[i].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += wrap(form[i]) + "*dz" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string printCanonical(const TwoForm& form) {
  std::string out;
  for (int i = 0; i < form.ambient(); ++i) {
    for (int j = i + 1; j < form.ambient(); ++j) {
      const Polynomial c = form.get(i, j);
      if (c.isZero()) continue;
      if (!out.empty()) out += " + ";
      out += wrap(c) + "*dz" + std::to_string(i + 1) + "^dz" + std::to_string(j + 1);
    }
  }
  return out.empty() ? "0" : out;
}

std::string printCanonical(const ThreeForm& form) {
  std::string out;
  for (const auto& [i, j, k] : form.indexTriples()) {
    const Polynomial& c = form.get(i, j, k);
    if (c.isZero()) continue;
    if (!out.empty()) out += " + ";
    out += wrap(c) + "*dz" + std::to_string(i + 1) + "^dz" + std::to_string(j + 1) + "^dz" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string printCanonical(const Ideal& ideal) {
  std::string out = "ideal(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += printCanonical(ideal.generators()[i]);
  }
  return out + ")";
}

std::string serializeReport(const std::vector<ClaimRecord>& records, ReportFormat format, bool includeTiming) {
  auto elapsedMs = [](const ClaimRecord& r) { return static_cast<double>(r.elapsed.count()) / 1000.0; };
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json item;
      item["id"] = r.id;
      item["status"] = toString(r.status);
      item["description"] = r.description;
      item["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
      item["elapsed_ms"] = includeTiming ? nlohmann::ordered_json(elapsedMs(r)) : nlohmann::ordered_json(nullptr);
      out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
  }

  std::size_t idWidth = 2;
  std::size_t statusWidth = 6;
  for (const auto& r : records) {
    idWidth = std::max(idWidth, r.id.size());
    statusWidth = std::max(statusWidth, std::string(toString(r.status)).size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); };
  os << pad("id", idWidth) << "  " << pad("status", statusWidth) << "  ";
  if (includeTiming) os << "elapsed_ms  ";
  os << "description\n";
  for (const auto& r : records) {
    os << pad(r.id, idWidth) << "  " << pad(toString(r.status), statusWidth) << "  ";
    if (includeTiming) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << elapsedMs(r);
      std::string cell = ms.str();
      os << std::string(cell.size() < 10 ? 10 - cell.size() : 0, ' ') << cell << "  ";
    }
    os << r.description << "\n";
    if (r.witness) os << std::string(idWidth + statusWidth + 4, ' ') << "witness: " << *r.witness << "\n";
  }
  return os.str();
}

}  // namespace folcheck
