#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "folcheck/catalog.hpp"
#include "folcheck/forms.hpp"
#include "folcheck/ideal.hpp"
#include "folcheck/integrals.hpp"
#include "folcheck/matrix.hpp"
#include "folcheck/report.hpp"
#include "folcheck/textio.hpp"
#include "folcheck/torus.hpp"

namespace folcheck::cli {

const std::vector<CommandInfo>& commandTable() {
  static const std::vector<CommandInfo> table = {
      {"check", "projectivity and integrability of a 1-form", {"parseOneForm", "checkProjective", "isIntegrable", "radialContraction"}},
      {"contract", "radial contraction sum z_i A_i", {"radialContraction"}},
      {"d", "exterior derivative of a 1-form", {"exteriorDerivative"}},
      {"wedge", "wedge product of two 1-forms", {"wedge"}},
      {"sing", "singular ideal, optionally compared with a given ideal", {"singularIdeal", "varietyEquals"}},
      {"poly", "parse, print and evaluate a polynomial",
       {"parsePolynomial", "printCanonical", "ringOps", "homogeneousDegree", "partialDerivative", "linearSubstitute",
        "evaluate"}},
      {"pullback", "pullback under a linear map of the ambient space", {"pullbackLinear"}},
      {"pullback-p2", "pullback of a plane form under a 3x4 projection", {"pullbackFromP2"}},
      {"divide", "divide a 1-form by a common polynomial factor", {"dividePolynomialFactor"}},
      {"proj-equal", "whether two forms differ by a nonzero constant", {"projectiveEqual"}},
      {"groebner", "reduced Groebner basis of an ideal", {"buchberger"}},
      {"reduce", "normal form of a polynomial modulo an ideal", {"normalForm"}},
      {"member", "ideal or radical membership", {"idealMembership", "radicalMembership"}},
      {"variety", "compare the varieties of two ideals", {"varietyEquals"}},
      {"union", "product ideal cutting out a union of varieties", {"idealProduct"}},
      {"decompose", "weight decomposition under a diagonal subgroup", {"weightDecompose", "monomialWeight"}},
      {"limit", "limit of t . form as t -> 0 or infinity", {"limitPoint"}},
      {"fix-lattice", "lattice of diagonal subgroups fixing a form", {"fixingLattice"}},
      {"destabilize", "Hilbert-Mumford check for a diagonal subgroup", {"destabilizingCheck"}},
      {"first-integral", "check a rational first integral f/g", {"isFirstIntegral"}},
      {"rational-foliation", "foliation defined by a rational function f/g", {"foliationFromRational"}},
      {"log-build", "logarithmic form from factors and residues", {"buildLogForm"}},
      {"log-verify", "check a form against a logarithmic product", {"verifyLogDecomposition"}},
      {"boundary", "boundary logarithmic form of shape 1, 2 or 3", {"buildBoundaryLogForm"}},
      {"euler-complete", "solve sum z_i A_i = 0 for one coefficient", {"completeFromEuler"}},
      {"family", "members of the rational and logarithmic families", {"familyRational", "familyLogarithmic"}},
      {"show", "named form with its status and source", {"namedForm"}},
      {"list", "keys of the named forms", {"namedForm"}},
      {"cubic", "the form 3 f dz3 - z3 df", {"namedForm"}},
      {"dim", "4 C(s+4,3) - C(s+5,3) - 1", {"dimensionFormula"}},
      {"verify-paper", "replay the claim ledger", {"verifyPaperReport", "serializeReport", "dispatch"}},
  };
  return table;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string summary(const std::string& name) {
  for (const auto& c : commandTable()) {
    if (c.name == name) return c.summary;
  }
  return {};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// An argument that names an existing file is replaced by its contents.
std::string readSource(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return readFile(arg);
  return arg;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<Scalar> parseScalars(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& item : split(text, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw UsageError("empty entry in '" + text + "'");
    out.push_back(parseScalar(item.substr(first, last - first + 1)));
  }
  return out;
}

std::vector<Polynomial> parsePolynomials(const std::string& text, int ambient) {
  std::vector<Polynomial> out;
  for (const auto& item : split(readSource(text), ';')) out.push_back(parsePolynomial(item, ambient));
  return out;
}

Matrix parseMatrix(const std::string& text) {
  const auto rows = split(text, ';');
  std::vector<std::vector<Scalar>> entries;
  for (const auto& row : rows) entries.push_back(parseScalars(row));
  if (entries.empty() || entries.front().empty()) throw UsageError("empty matrix");
  Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.front().size()));
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != entries.front().size()) throw UsageError("matrix rows differ in length");
    for (std::size_t c = 0; c < entries[r].size(); ++c) m(static_cast<int>(r), static_cast<int>(c)) = entries[r][c];
  }
  return m;
}

WeightVector parseWeights(const std::vector<long>& w) {
  if (w.size() != 4) throw UsageError("--weights takes four integers n1,n2,n3,n4");
  return WeightVector(w[0], w[1], w[2], w[3]);
}

std::string weightText(const WeightVector& w) {
  std::string out = "(";
  for (int i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

struct FormInput {
  std::string source;
  std::string expr;
  int ambient = 4;
};

void addFormInput(CLI::App* sub, FormInput& in) {
  sub->add_option("form", in.source, "named form key or file holding a 1-form");
  sub->add_option("--expr", in.expr, "inline 1-form");
  sub->add_option("--ambient", in.ambient, "variables for file or inline input")->check(CLI::Range(1, 6));
}

OneForm resolveForm(const std::string& source, int ambient) {
  const auto& keys = namedFormKeys();
  if (std::find(keys.begin(), keys.end(), source) != keys.end()) return namedForm(source).form;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(source, ec)) {
    throw UsageError("'" + source + "' is neither a named form nor a readable file");
  }
  return parseOneForm(readFile(source), ambient);
}

OneForm loadForm(const FormInput& in) {
  if (!in.expr.empty()) {
    if (!in.source.empty()) throw UsageError("give a form source or --expr, not both");
    return parseOneForm(in.expr, in.ambient);
  }
  if (in.source.empty()) throw UsageError("missing form: pass a named key, a file or --expr");
  return resolveForm(in.source, in.ambient);
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

int comparisonExit(const VarietyComparison& c, std::ostream& out) {
  out << "relation: " << toString(c.relation) << "\n";
  if (c.witness) out << "witness: " << printCanonical(*c.witness) << "\n";
  if (c.note) out << "note: " << *c.note << "\n";
  if (c.relation == VarietyRelation::kInconclusive) return kExitInconclusive;
  return c.equal() ? kExitVerified : kExitFailed;
}

std::size_t envBudget(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a nonnegative integer");
  }
}

int reportExit(const std::vector<ClaimRecord>& records, bool expectErrata) {
  const auto& known = knownErrata();
  bool failed = false;
  bool inconclusive = false;
  for (const auto& r : records) {
    const bool isKnown = std::find(known.begin(), known.end(), r.id) != known.end();
    switch (r.status) {
      case ClaimStatus::kVerified:
        if (expectErrata && isKnown) failed = true;
        break;
      case ClaimStatus::kErratum:
        if (!(expectErrata && isKnown)) failed = true;
        break;
      case ClaimStatus::kRefuted:
        failed = true;
        break;
      case ClaimStatus::kInconclusive:
        inconclusive = true;
        break;
    }
  }
  if (failed) return kExitFailed;
  return inconclusive ? kExitInconclusive : kExitVerified;
}

using Action = std::function<int()>;

class Registry {
 public:
  explicit Registry(CLI::App& app) : app_(app) {}

  CLI::App* add(const std::string& name, Action action) {
    CLI::App* sub = app_.add_subcommand(name, summary(name));
    actions_.emplace_back(sub, std::move(action));
    return sub;
  }
  // For nested subcommands such as family rational.
  void bind(CLI::App* sub, Action action) { actions_.emplace_back(sub, std::move(action)); }

  const Action* selected() const {
    for (const auto& [sub, action] : actions_) {
      if (sub->parsed() && sub->get_subcommands().empty()) return &action;
    }
    return nullptr;
  }

 private:
  CLI::App& app_;
  std::vector<std::pair<CLI::App*, Action>> actions_;
};

void registerFormCommands(Registry& reg, std::ostream& out, const GroebnerBudget& budget) {
  {
    auto in = std::make_shared<FormInput>();
    addFormInput(reg.add("check", [in, &out] {
      const OneForm form = loadForm(*in);
      const ProjectivityReport p = checkProjective(form);
      const IntegrabilityReport i = isIntegrable(form);
      out << "homogeneous: " << yesNo(p.homogeneous) << "\n";
      if (p.offendingSlot) out << "offending coefficient: dz" << *p.offendingSlot + 1 << "\n";
      out << "radial contraction: " << printCanonical(p.contraction) << "\n";
      if (p.foliationDegree) out << "foliation degree: " << *p.foliationDegree << "\n";
      out << "integrable: " << yesNo(i.integrable) << "\n";
      if (!i.integrable) out << "form ^ d(form): " << printCanonical(i.witness) << "\n";
      return p.passed() && i.integrable ? kExitVerified : kExitFailed;
    }), *in);
  }
  {
    auto in = std::make_shared<FormInput>();
    addFormInput(reg.add("contract", [in, &out] {
      out << printCanonical(radialContraction(loadForm(*in))) << "\n";
      return kExitVerified;
    }), *in);
  }
  {
    auto in = std::make_shared<FormInput>();
    addFormInput(reg.add("d", [in, &out] {
      out << printCanonical(exteriorDerivative(loadForm(*in))) << "\n";
      return kExitVerified;
    }), *in);
  }
  {
    struct Args {
      std::string first, second;
      int ambient = 4;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("wedge", [a, &out] {
      out << printCanonical(wedge(resolveForm(a->first, a->ambient), resolveForm(a->second, a->ambient))) << "\n";
      return kExitVerified;
    });
    sub->add_option("first", a->first, "named form or file")->required();
    sub->add_option("second", a->second, "named form or file")->required();
    sub->add_option("--ambient", a->ambient, "variables for file input")->check(CLI::Range(1, 6));
  }
  {
    struct Args {
      FormInput in;
      std::string equals;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("sing", [a, &out, &budget] {
      const OneForm form = loadForm(a->in);
      const Ideal sing = singularIdeal(form);
      out << "singular ideal: " << printCanonical(sing) << "\n";
      if (a->equals.empty()) return kExitVerified;
      const Ideal claimed = parseIdeal(readSource(a->equals), form.ambient());
      return comparisonExit(varietyEquals(sing, claimed, budget), out);
    });
    addFormInput(sub, a->in);
    sub->add_option("--equals", a->equals, "ideal text or file, e.g. union(ideal(z1, z2), ideal(z3, z4))");
  }
  {
    struct Args {
      FormInput in;
      std::string matrix;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("pullback", [a, &out] {
      out << printCanonical(pullbackLinear(loadForm(a->in), parseMatrix(a->matrix))) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
    sub->add_option("--matrix", a->matrix, "rows separated by ';', entries by ','")->required();
  }
  {
    struct Args {
      FormInput in;
      std::string matrix = "1,0,0,0;0,1,0,0;0,0,1,0";
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("pullback-p2", [a, &out] {
      out << printCanonical(pullbackFromP2(loadForm(a->in), parseMatrix(a->matrix))) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
    sub->add_option("--matrix", a->matrix, "3x4 projection, rows separated by ';'")->capture_default_str();
  }
  {
    struct Args {
      FormInput in;
      std::string by;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("divide", [a, &out] {
      const OneForm form = loadForm(a->in);
      try {
        out << printCanonical(dividePolynomialFactor(form, parsePolynomial(readSource(a->by), form.ambient()))) << "\n";
        return kExitVerified;
      } catch (const NonDivisibleError& e) {
        out << "not divisible: dz" << e.slot() + 1 << " leaves remainder " << printCanonical(e.remainder()) << "\n";
        return kExitFailed;
      }
    });
    addFormInput(sub, a->in);
    sub->add_option("--by", a->by, "polynomial factor")->required();
  }
  {
    struct Args {
      std::string first, second;
      int ambient = 4;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("proj-equal", [a, &out] {
      const auto ratio = projectiveEqual(resolveForm(a->first, a->ambient), resolveForm(a->second, a->ambient));
      if (!ratio) {
        out << "not proportional\n";
        return kExitFailed;
      }
      out << "second = " << toString(*ratio) << " * first\n";
      return kExitVerified;
    });
    sub->add_option("first", a->first, "named form or file")->required();
    sub->add_option("second", a->second, "named form or file")->required();
    sub->add_option("--ambient", a->ambient, "variables for file input")->check(CLI::Range(1, 6));
  }
}

void registerAlgebraCommands(Registry& reg, std::ostream& out, const GroebnerBudget& budget) {
  {
    struct Args {
      std::string text;
      int ambient = 4;
      int diff = 0;
      std::string at;
      std::string subst;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("poly", [a, &out] {
      Polynomial p = parsePolynomial(readSource(a->text), a->ambient);
      if (!a->subst.empty()) p = linearSubstitute(p, parseMatrix(a->subst));
      if (a->diff != 0) {
        if (a->diff < 1 || a->diff > p.ambient()) throw UsageError("--diff index out of range");
        p = partialDerivative(p, a->diff - 1);
      }
      out << printCanonical(p) << "\n";
      const Homogeneity h = homogeneousDegree(p);
      if (h.homogeneous()) {
        out << "homogeneous of degree " << h.degree << "\n";
      } else if (h.kind == Homogeneity::kMixed) {
        out << "not homogeneous\n";
      }
      if (!a->at.empty()) {
        const std::vector<Scalar> point = parseScalars(a->at);
        if (static_cast<int>(point.size()) != p.ambient()) throw UsageError("--at needs one value per variable");
        out << "value: " << toString(evaluate(p, point)) << "\n";
      }
      return kExitVerified;
    });
    sub->add_option("polynomial", a->text, "polynomial text or file")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
    sub->add_option("--diff", a->diff, "differentiate in z_k");
    sub->add_option("--at", a->at, "evaluate at comma-separated rationals");
    sub->add_option("--subst", a->subst, "substitute z -> M z, rows separated by ';'");
  }
  struct IdealArgs {
    std::string ideal;
    std::string poly;
    int ambient = 4;
    bool lex = false;
    bool radical = false;
  };
  {
    auto a = std::make_shared<IdealArgs>();
    CLI::App* sub = reg.add("groebner", [a, &out, &budget] {
      const GroebnerBasis gb = buchberger(parseIdeal(readSource(a->ideal), a->ambient),
                                          a->lex ? MonomialOrder::kLex : MonomialOrder::kGrevlex, budget);
      for (const auto& g : gb.basis) out << printCanonical(g) << "\n";
      return kExitVerified;
    });
    sub->add_option("ideal", a->ideal, "ideal(...) text or file")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
    sub->add_flag("--lex", a->lex, "lexicographic order instead of grevlex");
  }
  {
    auto a = std::make_shared<IdealArgs>();
    CLI::App* sub = reg.add("reduce", [a, &out, &budget] {
      const GroebnerBasis gb = buchberger(parseIdeal(readSource(a->ideal), a->ambient), MonomialOrder::kGrevlex, budget);
      out << printCanonical(normalForm(parsePolynomial(readSource(a->poly), a->ambient), gb)) << "\n";
      return kExitVerified;
    });
    sub->add_option("polynomial", a->poly, "polynomial text or file")->required();
    sub->add_option("--ideal", a->ideal, "ideal(...) text or file")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
  }
  {
    auto a = std::make_shared<IdealArgs>();
    CLI::App* sub = reg.add("member", [a, &out, &budget] {
      const Ideal ideal = parseIdeal(readSource(a->ideal), a->ambient);
      const Polynomial f = parsePolynomial(readSource(a->poly), a->ambient);
      const bool in = a->radical ? radicalMembership(f, ideal, budget) : idealMembership(f, ideal, budget);
      out << (in ? "member" : "not a member") << "\n";
      return in ? kExitVerified : kExitFailed;
    });
    sub->add_option("polynomial", a->poly, "polynomial text or file")->required();
    sub->add_option("--ideal", a->ideal, "ideal(...) text or file")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
    sub->add_flag("--radical", a->radical, "test membership in the radical");
  }
  {
    struct Args {
      std::string left, right;
      int ambient = 4;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("variety", [a, &out, &budget] {
      return comparisonExit(varietyEquals(parseIdeal(readSource(a->left), a->ambient),
                                          parseIdeal(readSource(a->right), a->ambient), budget),
                            out);
    });
    sub->add_option("left", a->left, "ideal text or file")->required();
    sub->add_option("right", a->right, "ideal text or file")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
  }
  {
    struct Args {
      std::vector<std::string> ideals;
      int ambient = 4;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("union", [a, &out] {
      Ideal product = parseIdeal(readSource(a->ideals.front()), a->ambient);
      for (std::size_t i = 1; i < a->ideals.size(); ++i) {
        product = idealProduct(product, parseIdeal(readSource(a->ideals[i]), a->ambient));
      }
      out << printCanonical(product) << "\n";
      return kExitVerified;
    });
    sub->add_option("ideals", a->ideals, "ideal texts or files")->required();
    sub->add_option("--ambient", a->ambient, "number of variables")->check(CLI::Range(1, 6));
  }
}

void registerTorusCommands(Registry& reg, std::ostream& out) {
  struct Args {
    FormInput in;
    std::vector<long> weights;
    std::string dir;
  };
  auto weightsOption = [](CLI::App* sub, Args& a) {
    sub->add_option("--weights", a.weights, "n1,n2,n3,n4 summing to zero")->delimiter(',')->required();
  };
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("decompose", [a, &out] {
      const OneForm form = loadForm(a->in);
      const WeightVector n = parseWeights(a->weights);
      for (const auto& [w, part] : weightDecompose(form, n)) out << "weight " << w << ": " << printCanonical(part) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
    weightsOption(sub, *a);
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("limit", [a, &out] {
      const LimitDirection d = a->dir == "zero" ? LimitDirection::kToZero : LimitDirection::kToInfinity;
      out << printCanonical(limitPoint(loadForm(a->in), parseWeights(a->weights), d)) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
    weightsOption(sub, *a);
    sub->add_option("--dir", a->dir, "zero or infinity")->required()->check(CLI::IsMember({"zero", "infinity"}));
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("fix-lattice", [a, &out] {
      const auto basis = fixingLattice(loadForm(a->in));
      out << "rank " << basis.size() << "\n";
      for (const auto& b : basis) out << weightText(b) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("destabilize", [a, &out] {
      const DestabilizingReport r = destabilizingCheck(loadForm(a->in), parseWeights(a->weights));
      out << "driven to zero: " << yesNo(r.drivenToZero) << "\nminimal weight: " << r.minWeight << "\n";
      return r.drivenToZero ? kExitVerified : kExitFailed;
    });
    addFormInput(sub, a->in);
    weightsOption(sub, *a);
  }
}

void registerIntegralCommands(Registry& reg, std::ostream& out) {
  struct Args {
    FormInput in;
    std::string num, den, factors, lambdas, lines, alpha, coeffs, degrees;
    int shape = 1;
    int slot = 3;
    int s = 1;
    std::string a = "0";
  };
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("first-integral", [a, &out] {
      const OneForm form = loadForm(a->in);
      const RationalPair pair(parsePolynomial(readSource(a->num), form.ambient()),
                              parsePolynomial(readSource(a->den), form.ambient()));
      const FirstIntegralReport r = isFirstIntegral(form, pair);
      out << "first integral: " << yesNo(r.holds) << "\n";
      if (!r.holds) out << "form ^ (g df - f dg): " << printCanonical(r.witness) << "\n";
      return r.holds ? kExitVerified : kExitFailed;
    });
    addFormInput(sub, a->in);
    sub->add_option("--num", a->num, "numerator f")->required();
    sub->add_option("--den", a->den, "denominator g")->required();
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("rational-foliation", [a, &out] {
      const RationalPair pair(parsePolynomial(readSource(a->num), a->in.ambient),
                              parsePolynomial(readSource(a->den), a->in.ambient));
      const RationalFoliation r = foliationFromRational(pair);
      out << printCanonical(r.form) << "\n";
      out << "removed factor: " << printCanonical(Polynomial::monomial(a->in.ambient, r.removedMonomial, r.removedContent))
          << "\n";
      if (r.nonReduced) out << "warning: a common factor remains\n";
      return kExitVerified;
    });
    sub->add_option("--num", a->num, "numerator f")->required();
    sub->add_option("--den", a->den, "denominator g")->required();
    sub->add_option("--ambient", a->in.ambient, "number of variables")->check(CLI::Range(1, 6));
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("log-build", [a, &out] {
      const LogData data(parsePolynomials(a->factors, a->in.ambient), parseScalars(a->lambdas));
      out << printCanonical(buildLogForm(data)) << "\n";
      return kExitVerified;
    });
    sub->add_option("--factors", a->factors, "factors separated by ';'")->required();
    sub->add_option("--lambdas", a->lambdas, "residues separated by ','")->required();
    sub->add_option("--ambient", a->in.ambient, "number of variables")->check(CLI::Range(1, 6));
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("log-verify", [a, &out] {
      const OneForm form = loadForm(a->in);
      const LogData data(parsePolynomials(a->factors, form.ambient()), parseScalars(a->lambdas));
      const LogDecompositionReport r = verifyLogDecomposition(form, data);
      if (r.matches) {
        out << "matches with ratio " << toString(*r.ratio) << "\n";
        return kExitVerified;
      }
      out << "no match; the product expands to " << printCanonical(r.expanded) << "\n";
      return kExitFailed;
    });
    addFormInput(sub, a->in);
    sub->add_option("--factors", a->factors, "factors separated by ';'")->required();
    sub->add_option("--lambdas", a->lambdas, "residues separated by ','")->required();
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("boundary", [a, &out] {
      BoundaryLogData data{a->shape, parsePolynomials(a->lines, 4), parseScalars(a->lambdas),
                           parsePolynomial(readSource(a->alpha))};
      out << printCanonical(buildBoundaryLogForm(data)) << "\n";
      return kExitVerified;
    });
    sub->add_option("--shape", a->shape, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    sub->add_option("--lines", a->lines, "linear forms separated by ';'")->required();
    sub->add_option("--lambdas", a->lambdas, "residues separated by ','")->required();
    sub->add_option("--alpha", a->alpha, "homogeneous alpha of degree equal to the shape")->required();
  }
  {
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("euler-complete", [a, &out] {
      const OneForm form = loadForm(a->in);
      if (form.ambient() != 3) throw UsageError("euler-complete works on 3-variable forms");
      const int k = a->slot - 1;
      const int i = k == 0 ? 1 : 0;
      const int j = k == 2 ? 1 : 2;
      const auto completed = completeFromEuler(i, form[i], j, form[j], k);
      if (!completed) {
        out << "no completion: z" << k + 1 << " does not divide the remaining terms\n";
        return kExitFailed;
      }
      out << printCanonical(*completed) << "\n";
      return kExitVerified;
    });
    addFormInput(sub, a->in);
    sub->add_option("--slot", a->slot, "coefficient to solve for, 1..3")->capture_default_str()->check(CLI::Range(1, 3));
  }
  {
    CLI::App* family = reg.add("family", [] { return kExitVerified; });
    family->require_subcommand(1);
    auto a = std::make_shared<Args>();
    CLI::App* rational = family->add_subcommand("rational", "member of the rational family");
    rational->add_option("--s", a->s, "degree s >= 1")->required();
    rational->add_option("--a", a->a, "parameter a")->capture_default_str();
    rational->add_option("--coeffs", a->coeffs, "a_0..a_s separated by ','")->required();
    reg.bind(rational, [a, &out] {
      const RationalFamilyMember m = familyRational(a->s, parseScalar(a->a), parseScalars(a->coeffs));
      out << printCanonical(m.form) << "\n";
      out << "first integral: (" << printCanonical(m.integral.numerator()) << ") / ("
          << printCanonical(m.integral.denominator()) << ")\n";
      return kExitVerified;
    });
    auto b = std::make_shared<Args>();
    CLI::App* log = family->add_subcommand("log", "member of the logarithmic family");
    log->add_option("--s", b->degrees, "s1,s2,s3")->required();
    log->add_option("--a", b->a, "parameter a")->capture_default_str();
    log->add_option("--lambdas", b->lambdas, "lambda1,lambda2,lambda3")->required();
    reg.bind(log, [b, &out] {
      const std::vector<Scalar> s = parseScalars(b->degrees);
      if (s.size() != 3 || !std::all_of(s.begin(), s.end(), [](const Scalar& v) { return isInteger(v); })) {
        throw UsageError("--s takes three integers");
      }
      const LogFamilyMember m = familyLogarithmic(static_cast<int>(s[0].get_num().get_si()),
                                                  static_cast<int>(s[1].get_num().get_si()),
                                                  static_cast<int>(s[2].get_num().get_si()), parseScalar(b->a),
                                                  parseScalars(b->lambdas));
      out << printCanonical(m.form) << "\n";
      out << "f_a: " << printCanonical(m.fa) << "\n";
      return kExitVerified;
    });
  }
}

void registerCatalogCommands(Registry& reg, std::ostream& out, const GroebnerBudget& budget) {
  {
    auto key = std::make_shared<std::string>();
    CLI::App* sub = reg.add("show", [key, &out] {
      const NamedForm f = namedForm(*key);
      out << printCanonical(f.form) << "\n";
      out << "status: " << toString(f.status) << "\nsource: " << f.source << "\n";
      return kExitVerified;
    });
    sub->add_option("key", *key, "named form key")->required();
  }
  reg.add("list", [&out] {
    for (const auto& key : namedFormKeys()) out << key << "  " << toString(namedForm(key).status) << "\n";
    return kExitVerified;
  });
  {
    auto f = std::make_shared<std::string>();
    CLI::App* sub = reg.add("cubic", [f, &out] {
      out << printCanonical(cubicForm(parsePolynomial(readSource(*f)))) << "\n";
      return kExitVerified;
    });
    sub->add_option("f", *f, "cubic in z1..z4")->required();
  }
  {
    auto s = std::make_shared<int>(0);
    CLI::App* sub = reg.add("dim", [s, &out] {
      out << dimensionFormula(*s).get_str() << "\n";
      return kExitVerified;
    });
    sub->add_option("s", *s, "foliation degree")->required()->check(CLI::NonNegativeNumber);
  }
  {
    struct Args {
      bool json = false;
      bool expectErrata = false;
      bool timing = false;
      std::uint64_t seed = 1;
    };
    auto a = std::make_shared<Args>();
    CLI::App* sub = reg.add("verify-paper", [a, &out, &budget] {
      ReportOptions options;
      options.budget = budget;
      options.seed = a->seed;
      const auto records = verifyPaperReport(options);
      out << serializeReport(records, a->json ? ReportFormat::kJson : ReportFormat::kText, a->timing);
      return reportExit(records, a->expectErrata);
    });
    sub->add_flag("--json", a->json, "JSON output");
    sub->add_flag("--expect-errata", a->expectErrata, "treat the known errata as success");
    sub->add_flag("--timing", a->timing, "include elapsed time per record");
    sub->add_option("--seed", a->seed, "seed for the sampled instances")->capture_default_str();
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    GroebnerBudget budget;
    budget.max_pairs = envBudget("FOLCHECK_MAX_PAIRS", budget.max_pairs);
    budget.max_reductions = envBudget("FOLCHECK_MAX_REDUCTIONS", budget.max_reductions);

    CLI::App app("Exact checks for codimension-one foliations on projective 3-space", "folcheck");
    app.require_subcommand(1);
    app.add_option("--max-pairs", budget.max_pairs, "Groebner pair budget (env FOLCHECK_MAX_PAIRS)");
    app.add_option("--max-reductions", budget.max_reductions,
                   "Groebner reduction budget (env FOLCHECK_MAX_REDUCTIONS)");

    Registry reg(app);
    registerFormCommands(reg, out, budget);
    registerAlgebraCommands(reg, out, budget);
    registerTorusCommands(reg, out);
    registerIntegralCommands(reg, out);
    registerCatalogCommands(reg, out, budget);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitVerified : kExitUsage;
    }

    const Action* action = reg.selected();
    if (action == nullptr) {
      err << "error: no subcommand selected\n";
      return kExitUsage;
    }
    return (*action)();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace folcheck::cli
