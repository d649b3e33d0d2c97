#include <doctest.h>

#include "folcheck/catalog.hpp"
#include "folcheck/textio.hpp"
#include "folcheck/torus.hpp"
#include "support/oracles.hpp"

using namespace folcheck;

namespace {
OneForm F(std::string_view text, int n = 4) { return parseOneForm(text, n); }
OneForm named(const char* key) { return namedForm(key).form; }

// Weight of a single term m dz_slot computed straight from the action:
// diag(t^n) . (m dz_slot) = t^(<n, exps> + n_slot) m dz_slot.
long directWeight(const Monomial& m, int slot, const WeightVector& n) {
  long w = n[slot];
  for (int i = 0; i < 4; ++i) w += n[i] * m[i];
  return w;
}
}  // namespace

TEST_CASE("weight vectors") {
  CHECK_THROWS_AS(WeightVector(1, 1, 1, 1), std::invalid_argument);
  CHECK(WeightVector(2, 4, -6, 0).primitive() == WeightVector(1, 2, -3, 0));
  CHECK((-WeightVector(1, 2, -3, 0)) == WeightVector(-1, -2, 3, 0));
  const Matrix m = WeightVector(1, -1, 0, 0).at(Scalar(2));
  CHECK(m(0, 0) == 2);
  CHECK(m(1, 1) == Scalar(1, 2));
  CHECK(m(2, 2) == 1);
}

TEST_CASE("monomial weights match the action") {
  const WeightVector n(2, -1, 3, -4);
  oracle::Random rng(41);
  for (int t = 0; t < 100; ++t) {
    const OneForm w = rng.homogeneousForm(4, 2, 2);
    for (int slot = 0; slot < 4; ++slot) {
      for (const auto& [m, c] : w[slot].terms()) CHECK(monomialWeight(m, slot, n) == directWeight(m, slot, n));
    }
  }
}

TEST_CASE("weight decomposition reassembles and scales correctly") {
  const WeightVector n(3, 1, -1, -3);
  const Scalar t(2);
  oracle::Random rng(43);
  for (int k = 0; k < 30; ++k) {
    const OneForm w = rng.homogeneousForm(4, 2, 3);
    const WeightDecomposition parts = weightDecompose(w, n);
    OneForm sum(4);
    OneForm scaled(4);
    for (const auto& [weight, part] : parts) {
      sum += part;
      Scalar factor = 1;
      for (long e = 0; e < (weight < 0 ? -weight : weight); ++e) factor *= t;
      if (weight < 0) factor = 1 / factor;
      scaled += factor * part;
    }
    CHECK(sum == w);
    CHECK(pullbackLinear(w, n.at(t)) == scaled);
  }
}

TEST_CASE("omega splits into its three summands") {
  const OneForm omega = named("omega");
  // omega_i has weight n_i - n_(i+1); these three are distinct.
  const WeightVector n(2, -1, 3, -4);
  const WeightDecomposition parts = weightDecompose(omega, n);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(3) == named("omega1"));
  CHECK(parts.at(-4) == named("omega2"));
  CHECK(parts.at(7) == named("omega3"));
  // The fixing subgroup leaves a single eigencomponent.
  CHECK(weightDecompose(omega, WeightVector(3, 1, -1, -3)).size() == 1);
}

TEST_CASE("limits under one-parameter subgroups") {
  const OneForm omega = named("omega");
  const OneForm toInf = limitPoint(omega, WeightVector(3, -1, -1, -1), LimitDirection::kToInfinity);
  CHECK(projectiveEqual(named("omega1"), toInf).has_value());
  // Reversing the weights swaps the two directions.
  const WeightVector n(1, 1, -1, -1);
  CHECK(limitPoint(omega, n, LimitDirection::kToZero) == limitPoint(omega, -n, LimitDirection::kToInfinity));
  // A form of a single weight is its own limit.
  CHECK(limitPoint(F("z2*dz1 - z1*dz2"), n, LimitDirection::kToZero) == F("z2*dz1 - z1*dz2"));
}

TEST_CASE("fixing lattice") {
  const std::vector<WeightVector> omegaLattice = fixingLattice(named("omega"));
  REQUIRE(omegaLattice.size() == 1);
  CHECK((omegaLattice[0] == WeightVector(3, 1, -1, -3) || omegaLattice[0] == WeightVector(-3, -1, 1, 3)));

  const std::vector<WeightVector> l12 = fixingLattice(named("omega12"));
  CHECK(l12 == std::vector<WeightVector>{WeightVector(1, 0, -1, 0), WeightVector(0, 1, 2, -3)});

  // Every basis vector really fixes the form up to scale.
  for (const auto& v : l12) CHECK(weightDecompose(named("omega12"), v).size() == 1);
  CHECK(fixingLattice(F("z2*dz1 - z1*dz2")).size() == 3);
}

TEST_CASE("destabilizing subgroups") {
  const DestabilizingReport r = destabilizingCheck(named("omega"), WeightVector(3, 1, -1, -3));
  CHECK(r.drivenToZero);
  CHECK(r.minWeight > 0);
  CHECK_FALSE(destabilizingCheck(named("omega"), WeightVector(-3, -1, 1, 3)).drivenToZero);
}
