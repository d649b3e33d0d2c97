#include "properties.hpp"

#include <functional>

#include "folcheck/ideal.hpp"
#include "folcheck/textio.hpp"
#include "oracles.hpp"

namespace properties {

using namespace folcheck;

namespace {

Outcome run(const std::string& name, std::uint64_t seed, int cases,
            const std::function<std::string(oracle::Random&)>& body) {
  Outcome out{name, cases, 0, {}};
  oracle::Random rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& e) {
      failure = std::string("threw: ") + e.what();
    }
    if (!failure.empty()) {
      if (out.failures == 0) out.firstFailure = "case " + std::to_string(i) + ": " + failure;
      ++out.failures;
    }
  }
  return out;
}

TwoForm minus(const TwoForm& a, const TwoForm& b) {
  TwoForm out = b;
  out *= Polynomial::constant(b.ambient(), -1);
  out += a;
  return out;
}

}  // namespace

Outcome ddZero(std::uint64_t seed, int cases) {
  return run("d o d = 0", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(2, 5);
    const Polynomial f = rng.polynomial(n, 5, 6);
    if (!exteriorDerivative(differential(f)).isZero()) return "d(df) != 0 for " + printCanonical(f);
    // Second level, with the 3-form derivative written out by hand.
    const OneForm w = rng.form(n, 4, 4);
    const TwoForm dw = exteriorDerivative(w);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const Polynomial c = partialDerivative(dw.get(j, k), i) - partialDerivative(dw.get(i, k), j) +
                               partialDerivative(dw.get(i, j), k);
          if (!c.isZero()) return "d(dw) != 0 for " + printCanonical(w);
        }
      }
    }
    return {};
  });
}

Outcome leibniz(std::uint64_t seed, int cases) {
  return run("Leibniz rule", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(2, 4);
    const Polynomial f = rng.polynomial(n, 3, 4);
    const Polynomial g = rng.polynomial(n, 3, 4);
    if (differential(f * g) != f * differential(g) + g * differential(f)) return "d(fg) for " + printCanonical(f);
    const OneForm w = rng.form(n, 3, 3);
    TwoForm rhs = exteriorDerivative(w);
    rhs *= f;
    rhs += wedge(differential(f), w);
    if (!minus(exteriorDerivative(f * w), rhs).isZero()) return "d(f w) for " + printCanonical(w);
    return {};
  });
}

Outcome euler(std::uint64_t seed, int cases) {
  return run("Euler identity", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(1, 6);
    const int d = rng.uniform(0, 6);
    const Polynomial f = rng.homogeneous(n, d, 5);
    Polynomial sum(n);
    for (int i = 0; i < n; ++i) sum += Polynomial::variable(n, i) * partialDerivative(f, i);
    if (sum != f * Scalar(d)) return "sum z_i d_i f for " + printCanonical(f);
    if (radialContraction(differential(f)) != f * Scalar(d)) return "i_R df for " + printCanonical(f);
    return {};
  });
}

Outcome cartan(std::uint64_t seed, int cases) {
  // For coefficients homogeneous of degree k: i_R dw + d(i_R w) = (k + 1) w.
  return run("Cartan radial identity", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(2, 5);
    const int k = rng.uniform(0, 4);
    const OneForm w = rng.homogeneousForm(n, k, 4);
    const OneForm lhs = radialContraction(exteriorDerivative(w)) + differential(radialContraction(w));
    if (lhs != Scalar(k + 1) * w) return "Lie derivative for " + printCanonical(w);
    return {};
  });
}

Outcome pullbackEquivariance(std::uint64_t seed, int cases) {
  return run("pullback equivariance", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(2, 4);
    const OneForm w = rng.form(n, 3, 3);
    const Matrix a = rng.invertible(n);
    const Matrix b = rng.invertible(n);
    if (pullbackLinear(w, a * b) != pullbackLinear(pullbackLinear(w, a), b)) {
      return "(AB)^* != B^* A^* for " + printCanonical(w);
    }
    const Polynomial f = rng.polynomial(n, 3, 4);
    if (pullbackLinear(differential(f), a) != differential(linearSubstitute(f, a))) {
      return "M^* df != d(M^* f) for " + printCanonical(f);
    }
    // Pointwise: (M^* w)(x) = M^T w(M x).
    const std::vector<Scalar> x = rng.point(n);
    std::vector<Scalar> mx(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mx[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
    }
    const OneForm pulled = pullbackLinear(w, a);
    for (int j = 0; j < n; ++j) {
      Scalar expected = 0;
      for (int i = 0; i < n; ++i) expected += a(i, j) * oracle::evaluate(w[i], mx);
      if (oracle::evaluate(pulled[j], x) != expected) return "pointwise pullback for " + printCanonical(w);
    }
    return {};
  });
}

Outcome groebnerCriterion(std::uint64_t seed, int cases) {
  return run("Groebner S-polynomial reduction", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(2, 3);
    std::vector<Polynomial> gens;
    const int count = rng.uniform(1, 3);
    for (int i = 0; i < count; ++i) gens.push_back(rng.homogeneous(n, rng.uniform(1, 2), rng.uniform(1, 3)));
    const Ideal ideal(n, gens);
    const GroebnerBasis gb = buchberger(ideal);
    if (!satisfiesBuchbergerCriterion(gb)) return "S-polynomials do not reduce to zero";
    for (const auto& g : gens) {
      if (!normalForm(g, gb).isZero()) return "generator not reduced to zero: " + printCanonical(g);
    }
    // A random homogeneous element of degree 3 against the linear-algebra oracle.
    const Polynomial f = rng.homogeneous(n, 3, 3);
    const bool engine = normalForm(f, gb).isZero();
    if (engine != oracle::homogeneousMembership(f, gens)) return "membership disagrees for " + printCanonical(f);
    Polynomial combo(n);
    for (const auto& g : gens) {
      if (g.isZero()) continue;
      const int dq = 3 - g.totalDegree();
      combo += rng.homogeneous(n, dq, 2) * g;
    }
    if (!normalForm(combo, gb).isZero()) return "combination not reduced to zero";
    return {};
  });
}

Outcome roundTrip(std::uint64_t seed, int cases) {
  return run("parse/print round-trip", seed, cases, [](oracle::Random& rng) -> std::string {
    const int n = rng.uniform(1, 6);
    const Polynomial p = rng.polynomial(n, 6, rng.uniform(0, 7));
    const std::string text = printCanonical(p);
    if (parsePolynomial(text, n) != p) return "polynomial " + text;
    const int m = rng.uniform(1, 4);
    const OneForm w = rng.form(m, 4, rng.uniform(0, 4));
    const std::string formText = printCanonical(w);
    const OneForm back = parseOneForm(formText, m);
    if (back != w) return "form " + formText;
    if (printCanonical(back) != formText) return "reprint differs for " + formText;
    return {};
  });
}

std::vector<Outcome> runAll(std::uint64_t seed, int cases) {
  return {ddZero(seed, cases),
          leibniz(seed + 1, cases),
          euler(seed + 2, cases),
          cartan(seed + 3, cases),
          pullbackEquivariance(seed + 4, cases),
          groebnerCriterion(seed + 5, cases),
          roundTrip(seed + 6, cases)};
}

}  // namespace properties
