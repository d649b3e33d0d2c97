#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <stdexcept>
#include <vector>

#include "folcheck/monomial.hpp"
#include "folcheck/polynomial.hpp"

namespace folcheck {

// Finite generating set. Zero generators are dropped and the rest are stored
// as primitive integer polynomials with positive leading coefficient. An
// empty generator list is the zero ideal.
class Ideal {
 public:
  explicit Ideal(int ambient) : ambient_(ambient) {}
  Ideal(int ambient, std::vector<Polynomial> generators);

  int ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool isZero() const { return generators_.empty(); }

  friend bool operator==(const Ideal& a, const Ideal& b) = default;

 private:
  int ambient_;
  std::vector<Polynomial> generators_;
};

// Caps on Buchberger work. Exceeding either raises BudgetExceeded, which the
// comparison layer turns into an inconclusive answer.
struct GroebnerBudget {
  std::size_t max_pairs = 50000;
  std::size_t max_reductions = 5000000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduced basis: monic, inter-reduced, sorted by ascending leading monomial.
struct GroebnerBasis {
  int ambient = 0;
  MonomialOrder order = MonomialOrder::kGrevlex;
  std::vector<Polynomial> basis;

  bool isUnit() const { return basis.size() == 1 && basis.front().isConstant() && !basis.front().isZero(); }
};

// The zero ideal has the empty basis.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::kGrevlex,
                         const GroebnerBudget& budget = {});

// Leading monomial under an arbitrary order (Polynomial stores grevlex).
Monomial leadingMonomial(const Polynomial& p, MonomialOrder order);

// Unique remainder of f modulo a reduced basis.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

// True iff every S-polynomial of the basis reduces to zero.
bool satisfiesBuchbergerCriterion(const GroebnerBasis& basis);

bool idealMembership(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget = {});

// f vanishes on V(ideal): 1 lies in ideal + (1 - y f) with y appended as the
// last (smallest) variable.
bool radicalMembership(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget = {});

Ideal idealProduct(const Ideal& a, const Ideal& b);

enum class VarietyRelation { kEqual, kLeftInRight, kRightInLeft, kIncomparable, kInconclusive };

const char* toString(VarietyRelation relation);

// Set-theoretic comparison of the affine cones V(left) and V(right).
// kLeftInRight means V(left) is contained in V(right). The witness is the
// first generator that failed radical membership (of right in sqrt(left)
// when checking the first inclusion, otherwise of left in sqrt(right)).
struct VarietyComparison {
  VarietyRelation relation = VarietyRelation::kInconclusive;
  std::optional<Polynomial> witness;
  std::optional<std::string> note;

  bool equal() const { return relation == VarietyRelation::kEqual; }
};

VarietyComparison varietyEquals(const Ideal& left, const Ideal& right, const GroebnerBudget& budget = {});

// V(ideal) contains V(component): every generator of `ideal` lies in
// sqrt(component).
bool varietyContains(const Ideal& ideal, const Ideal& component, const GroebnerBudget& budget = {});

}  // namespace folcheck
