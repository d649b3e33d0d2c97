#pragma once

#include <array>
#include <map>
#include <vector>

#include "folcheck/forms.hpp"

namespace folcheck {

// Integer weights (n1, n2, n3, n4) of the diagonal subgroup
// t -> diag(t^n1, t^n2, t^n3, t^n4). The weights must sum to zero.
class WeightVector {
 public:
  WeightVector(long n1, long n2, long n3, long n4);
  explicit WeightVector(const std::array<long, 4>& n);

  long operator[](int i) const { return n_[static_cast<std::size_t>(i)]; }
  const std::array<long, 4>& values() const { return n_; }

  bool isZero() const;
  // Divided by the gcd of the entries; sign untouched.
  WeightVector primitive() const;
  WeightVector operator-() const;

  // diag(t^n1, ..., t^n4) at a nonzero rational t.
  Matrix at(const Scalar& t) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::array<long, 4> n_;
};

// <n, exponents> + n_slot, the exponent of t picked up by the term m dz_slot.
long monomialWeight(const Monomial& m, int slot, const WeightVector& n);

// Eigencomponents keyed by weight; only nonzero parts are present.
using WeightDecomposition = std::map<long, OneForm>;

WeightDecomposition weightDecompose(const OneForm& form, const WeightVector& n);

enum class LimitDirection { kToZero, kToInfinity };

// Projective limit of t . form: the lowest-weight part as t -> 0, the
// highest-weight part as t -> infinity.
OneForm limitPoint(const OneForm& form, const WeightVector& n, LimitDirection direction);

// Canonical basis (Hermite normal form, leading entries positive) of the
// lattice of zero-sum weight vectors under which every term of the form has
// the same weight.
std::vector<WeightVector> fixingLattice(const OneForm& form);

struct DestabilizingReport {
  bool drivenToZero = false;  // minimal weight > 0: t . form -> 0 as t -> 0
  long minWeight = 0;
};

DestabilizingReport destabilizingCheck(const OneForm& form, const WeightVector& n);

}  // namespace folcheck
