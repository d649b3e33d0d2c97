#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "folcheck/monomial.hpp"
#include "folcheck/scalar.hpp"

namespace folcheck {

class Matrix;

// Thrown when two operands live in polynomial rings of different sizes.
class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch(int left, int right);
};

// Sparse multivariate polynomial over the rationals. Terms are kept sorted in
// descending graded reverse lexicographic order with no zero coefficients, so
// equal polynomials have identical term lists.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Polynomial(int ambient = 4);

  static Polynomial constant(int ambient, const Scalar& value);
  static Polynomial variable(int ambient, int index);
  static Polynomial monomial(int ambient, const Monomial& m, const Scalar& coefficient = 1);
  // Sorts and merges like terms; zero coefficients are dropped.
  static Polynomial fromTerms(int ambient, std::vector<Term> terms);

  int ambient() const { return ambient_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first.isOne()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading data under grevlex; undefined on zero.
  const Monomial& leadingMonomial() const { return terms_.front().first; }
  const Scalar& leadingCoefficient() const { return terms_.front().second; }

  // -1 for the zero polynomial.
  int totalDegree() const;
  Scalar coefficient(const Monomial& m) const;

  // Reinterprets the polynomial with `ambient` variables. Shrinking fails
  // with std::invalid_argument if a dropped variable occurs.
  Polynomial withAmbient(int ambient) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;
  // Multiplication by a single term.
  Polynomial shifted(const Monomial& m, const Scalar& c = 1) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void requireSameAmbient(const Polynomial& other) const;

  int ambient_;
  std::vector<Term> terms_;
};

struct Homogeneity {
  enum Kind { kZero, kHomogeneous, kMixed };
  Kind kind = kZero;
  int degree = -1;  // meaningful only for kHomogeneous

  bool homogeneous() const { return kind == kHomogeneous; }
};

Homogeneity homogeneousDegree(const Polynomial& p);

// Variables are 0-based: index 0 is z1.
Polynomial partialDerivative(const Polynomial& p, int index);

// p evaluated at z -> M z for a square ambient x ambient matrix.
Polynomial linearSubstitute(const Polynomial& p, const Matrix& m);
// General linear change of variables: z_i -> sum_j M(i, j) w_j where M has
// p.ambient() rows; the result lives in M.cols() variables.
Polynomial substituteLinearForms(const Polynomial& p, const Matrix& m);

Scalar evaluate(const Polynomial& p, std::span<const Scalar> point);

// Positive rational c such that p / c has coprime integer coefficients
// (1 for zero).
Scalar content(const Polynomial& p);
// p / content(p), negated if needed so the leading coefficient is positive.
Polynomial primitivePart(const Polynomial& p);
// Largest monomial dividing every term (1 for zero).
Monomial monomialContent(const Polynomial& p);
Polynomial divideByMonomial(const Polynomial& p, const Monomial& m);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Leading-term division by a single nonzero divisor; the remainder is zero
// iff the divisor divides p exactly.
DivisionResult divide(const Polynomial& p, const Polynomial& divisor);
std::optional<Polynomial> divideExact(const Polynomial& p, const Polynomial& divisor);

// Returns c with b == c * a when the two are scalar multiples (both nonzero).
std::optional<Scalar> proportionality(const Polynomial& a, const Polynomial& b);

}  // namespace folcheck
