#include "folcheck/polynomial.hpp"

#include <algorithm>
#include <string>

#include "folcheck/matrix.hpp"

namespace folcheck {

namespace {

bool descending(const Polynomial::Term& a, const Polynomial::Term& b) {
  return compareGrevlex(a.first, b.first) > 0;
}

// Merges two descending term lists into a + sign * b.
std::vector<Polynomial::Term> mergeTerms(const std::vector<Polynomial::Term>& a,
                                         const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = 0;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = compareGrevlex(a[i].first, b[j].first);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(b[j].first, subtract ? Scalar(-b[j].second) : b[j].second);
      ++j;
    } else {
      Scalar c = subtract ? Scalar(a[i].second - b[j].second) : Scalar(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

void checkIndex(const Polynomial& p, int index) {
  if (index < 0 || index >= p.ambient()) {
    throw std::out_of_range("variable index " + std::to_string(index + 1) + " outside 1.." +
                            std::to_string(p.ambient()));
  }
}

}  // namespace

AmbientMismatch::AmbientMismatch(int left, int right)
    : std::invalid_argument("ambient mismatch: " + std::to_string(left) + " vs " + std::to_string(right) +
                            " variables") {}

Polynomial::Polynomial(int ambient) : ambient_(ambient) {
  if (ambient < 1 || ambient > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

Polynomial Polynomial::constant(int ambient, const Scalar& value) {
  Polynomial p(ambient);
  if (value != 0) p.terms_.emplace_back(Monomial(), value);
  return p;
}

Polynomial Polynomial::variable(int ambient, int index) {
  Polynomial p(ambient);
  checkIndex(p, index);
  p.terms_.emplace_back(Monomial::variable(index), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(int ambient, const Monomial& m, const Scalar& coefficient) {
  Polynomial p(ambient);
  if (m.lastVariable() >= ambient) throw std::invalid_argument("monomial uses a variable outside the ring");
  if (coefficient != 0) p.terms_.emplace_back(m, coefficient);
  return p;
}

Polynomial Polynomial::fromTerms(int ambient, std::vector<Term> terms) {
  Polynomial p(ambient);
  std::sort(terms.begin(), terms.end(), descending);
  for (auto& term : terms) {
    if (term.first.lastVariable() >= ambient) {
      throw std::invalid_argument("monomial uses a variable outside the ring");
    }
    if (!p.terms_.empty() && p.terms_.back().first == term.first) {
      p.terms_.back().second += term.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (term.second != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

int Polynomial::totalDegree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compareGrevlex(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Polynomial Polynomial::withAmbient(int ambient) const {
  Polynomial p(ambient);
  for (const auto& term : terms_) {
    if (term.first.lastVariable() >= ambient) {
      throw std::invalid_argument("cannot drop a variable that occurs in the polynomial");
    }
  }
  p.terms_ = terms_;
  return p;
}

void Polynomial::requireSameAmbient(const Polynomial& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch(ambient_, other.ambient_);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& term : p.terms_) term.second = -term.second;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  requireSameAmbient(other);
  terms_ = mergeTerms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  requireSameAmbient(other);
  terms_ = mergeTerms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= factor;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.requireSameAmbient(b);
  if (a.isZero() || b.isZero()) return Polynomial(a.ambient_);
  if (b.terms_.size() == 1) return a.shifted(b.terms_.front().first, b.terms_.front().second);
  if (a.terms_.size() == 1) return b.shifted(a.terms_.front().first, a.terms_.front().second);
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  }
  return Polynomial::fromTerms(a.ambient_, std::move(products));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ambient_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m, const Scalar& c) const {
  Polynomial p(ambient_);
  if (c == 0) return p;
  if (m.lastVariable() >= ambient_) throw std::invalid_argument("monomial uses a variable outside the ring");
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& [mono, coeff] : terms_) p.terms_.emplace_back(mono * m, coeff * c);
  return p;
}

Homogeneity homogeneousDegree(const Polynomial& p) {
  if (p.isZero()) return {};
  const int d = p.terms().front().first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return {Homogeneity::kMixed, -1};
  }
  return {Homogeneity::kHomogeneous, d};
}

Polynomial partialDerivative(const Polynomial& p, int index) {
  checkIndex(p, index);
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m[index];
    if (e == 0) continue;
    Monomial reduced = m;
    reduced.set(index, static_cast<Exponent>(e - 1));
    terms.emplace_back(reduced, c * e);
  }
  return Polynomial::fromTerms(p.ambient(), std::move(terms));
}

Polynomial substituteLinearForms(const Polynomial& p, const Matrix& m) {
  if (m.rows() != p.ambient()) {
    throw std::invalid_argument("substitution matrix has " + std::to_string(m.rows()) + " rows, expected " +
                                std::to_string(p.ambient()));
  }
  const int target = m.cols();
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(p.ambient()));
  for (int i = 0; i < p.ambient(); ++i) {
    std::vector<Polynomial::Term> terms;
    for (int j = 0; j < target; ++j) terms.emplace_back(Monomial::variable(j), m(i, j));
    images.push_back(Polynomial::fromTerms(target, std::move(terms)));
  }
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(p.ambient()));
  auto power = [&](int i, Exponent e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& [mono, coeff] : p.terms()) {
    Polynomial term = Polynomial::constant(target, coeff);
    for (int i = 0; i < p.ambient(); ++i) {
      if (mono[i] != 0) term *= power(i, mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial linearSubstitute(const Polynomial& p, const Matrix& m) {
  if (m.rows() != p.ambient() || m.cols() != p.ambient()) {
    throw std::invalid_argument("linear substitution needs a square " + std::to_string(p.ambient()) + "x" +
                                std::to_string(p.ambient()) + " matrix");
  }
  return substituteLinearForms(p, m);
}

Scalar evaluate(const Polynomial& p, std::span<const Scalar> point) {
  if (static_cast<int>(point.size()) != p.ambient()) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(p.ambient()));
  }
  Scalar total = 0;
  for (const auto& [m, c] : p.terms()) {
    Scalar value = c;
    for (int i = 0; i < p.ambient(); ++i) {
      for (Exponent e = 0; e < m[i]; ++e) value *= point[static_cast<std::size_t>(i)];
    }
    total += value;
  }
  return total;
}

Scalar content(const Polynomial& p) {
  if (p.isZero()) return 1;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

Polynomial primitivePart(const Polynomial& p) {
  if (p.isZero()) return p;
  Scalar c = content(p);
  if (p.leadingCoefficient() < 0) c = -c;
  Polynomial out = p;
  out *= Scalar(1 / c);
  return out;
}

Monomial monomialContent(const Polynomial& p) {
  if (p.isZero()) return Monomial();
  Monomial g = p.terms().front().first;
  for (const auto& [m, c] : p.terms()) g = Monomial::gcd(g, m);
  return g;
}

Polynomial divideByMonomial(const Polynomial& p, const Monomial& m) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) terms.emplace_back(mono.quotient(m), c);
  return Polynomial::fromTerms(p.ambient(), std::move(terms));
}

DivisionResult divide(const Polynomial& p, const Polynomial& divisor) {
  if (p.ambient() != divisor.ambient()) throw AmbientMismatch(p.ambient(), divisor.ambient());
  if (divisor.isZero()) throw std::domain_error("division by the zero polynomial");
  const Monomial& lead = divisor.leadingMonomial();
  const Scalar& leadCoeff = divisor.leadingCoefficient();
  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  Polynomial rest = p;
  while (!rest.isZero()) {
    const auto& [m, c] = rest.terms().front();
    if (lead.divides(m)) {
      const Monomial q = m.quotient(lead);
      const Scalar factor = c / leadCoeff;
      quotient.emplace_back(q, factor);
      rest -= divisor.shifted(q, factor);
    } else {
      remainder.emplace_back(m, c);
      rest -= Polynomial::monomial(p.ambient(), m, c);
    }
  }
  return {Polynomial::fromTerms(p.ambient(), std::move(quotient)),
          Polynomial::fromTerms(p.ambient(), std::move(remainder))};
}

std::optional<Polynomial> divideExact(const Polynomial& p, const Polynomial& divisor) {
  DivisionResult r = divide(p, divisor);
  if (!r.remainder.isZero()) return std::nullopt;
  return std::move(r.quotient);
}

std::optional<Scalar> proportionality(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero() || a.size() != b.size() || a.ambient() != b.ambient()) return std::nullopt;
  const Scalar ratio = b.leadingCoefficient() / a.leadingCoefficient();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].first != b.terms()[i].first || a.terms()[i].second * ratio != b.terms()[i].second) {
      return std::nullopt;
    }
  }
  return ratio;
}

}  // namespace folcheck
