#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "folcheck/ideal.hpp"
#include "folcheck/matrix.hpp"
#include "folcheck/polynomial.hpp"

namespace folcheck {

// A = sum_i A_i dz_i with one polynomial coefficient per variable.
class OneForm {
 public:
  explicit OneForm(int ambient = 4);
  explicit OneForm(std::vector<Polynomial> coefficients);

  static OneForm basis(int ambient, int index);

  int ambient() const { return ambient_; }
  const Polynomial& operator[](int index) const { return coeffs_.at(static_cast<std::size_t>(index)); }
  Polynomial& operator[](int index) { return coeffs_.at(static_cast<std::size_t>(index)); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  bool isZero() const;

  OneForm operator-() const;
  OneForm& operator+=(const OneForm& other);
  OneForm& operator-=(const OneForm& other);
  OneForm& operator*=(const Scalar& c);
  OneForm& operator*=(const Polynomial& f);

  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const Scalar& c, OneForm a) { return a *= c; }
  friend OneForm operator*(const Polynomial& f, OneForm a) { return a *= f; }

  friend bool operator==(const OneForm& a, const OneForm& b) = default;

 private:
  int ambient_;
  std::vector<Polynomial> coeffs_;
};

// Coefficients of dz_i ^ dz_j for i < j, stored in lexicographic pair order.
class TwoForm {
 public:
  explicit TwoForm(int ambient = 4);

  int ambient() const { return ambient_; }
  // Antisymmetric access: get(j, i) == -get(i, j), get(i, i) == 0.
  Polynomial get(int i, int j) const;
  Polynomial& at(int i, int j);  // requires i < j
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  bool isZero() const;

  TwoForm& operator+=(const TwoForm& other);
  TwoForm& operator*=(const Polynomial& f);
  friend bool operator==(const TwoForm& a, const TwoForm& b) = default;

 private:
  std::size_t slot(int i, int j) const;

  int ambient_;
  std::vector<Polynomial> coeffs_;
};

// Coefficients of dz_i ^ dz_j ^ dz_k for i < j < k.
class ThreeForm {
 public:
  explicit ThreeForm(int ambient = 4);

  int ambient() const { return ambient_; }
  const Polynomial& get(int i, int j, int k) const;  // requires i < j < k
  Polynomial& at(int i, int j, int k);
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  std::vector<std::array<int, 3>> indexTriples() const;
  bool isZero() const;

  friend bool operator==(const ThreeForm& a, const ThreeForm& b) = default;

 private:
  std::size_t slot(int i, int j, int k) const;

  int ambient_;
  std::vector<Polynomial> coeffs_;
};

// df
OneForm differential(const Polynomial& f);
// Coefficient of dz_i ^ dz_j is d_i A_j - d_j A_i.
TwoForm exteriorDerivative(const OneForm& form);

TwoForm wedge(const OneForm& a, const OneForm& b);
ThreeForm wedge(const OneForm& a, const TwoForm& b);

// Interior product with the radial field sum z_i d/dz_i.
Polynomial radialContraction(const OneForm& form);
OneForm radialContraction(const TwoForm& form);

struct ProjectivityReport {
  bool homogeneous = false;           // nonzero coefficients share one degree
  std::optional<int> commonDegree;    // that degree
  bool radialZero = false;
  std::optional<int> foliationDegree; // commonDegree - 1 when both checks pass
  std::optional<int> offendingSlot;   // coefficient that broke homogeneity
  Polynomial contraction;             // sum z_i A_i

  bool passed() const { return foliationDegree.has_value(); }
};

ProjectivityReport checkProjective(const OneForm& form);

struct IntegrabilityReport {
  bool integrable = false;
  ThreeForm witness;  // form ^ d(form); zero when integrable
};

IntegrabilityReport isIntegrable(const OneForm& form);

// g . form: substitute z -> M z in the coefficients and the differentials.
// The coefficient of dz_j in the result is sum_i M(i, j) A_i(M z).
OneForm pullbackLinear(const OneForm& form, const Matrix& m);

// Pullback of a plane form along a rank-3 linear map given as a 3 x 4
// matrix: plane coordinate i becomes sum_j P(i, j) z_j.
OneForm pullbackFromP2(const OneForm& planeForm, const Matrix& projection);

class NonDivisibleError : public std::runtime_error {
 public:
  NonDivisibleError(int slot, Polynomial remainder);

  int slot() const { return slot_; }
  const Polynomial& remainder() const { return remainder_; }

 private:
  int slot_;
  Polynomial remainder_;
};

// Coefficient-wise exact quotient; throws NonDivisibleError naming the first
// coefficient the factor does not divide.
OneForm dividePolynomialFactor(const OneForm& form, const Polynomial& factor);

Ideal singularIdeal(const OneForm& form);

// c with b == c * a, when one exists. Throws std::invalid_argument on a zero
// input. The candidate ratio is read off the smallest monomial of the first
// nonzero coefficient of a.
std::optional<Scalar> projectiveEqual(const OneForm& a, const OneForm& b);

// a ^ b == 0 with both nonzero: the forms define the same foliation up to a
// rational function factor.
bool sameFoliation(const OneForm& a, const OneForm& b);

}  // namespace folcheck
