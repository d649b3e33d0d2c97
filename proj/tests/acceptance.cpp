// Acceptance suite: one pass/fail line per criterion; exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "folcheck/catalog.hpp"
#include "folcheck/forms.hpp"
#include "folcheck/ideal.hpp"
#include "folcheck/integrals.hpp"
#include "folcheck/matrix.hpp"
#include "folcheck/textio.hpp"
#include "folcheck/torus.hpp"
#include "support/properties.hpp"

using namespace folcheck;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

int failures = 0;

void criterion(int number, const std::string& title, double limitSeconds, const std::function<void(Result&)>& body) {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.notes.push_back(std::string("threw: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limitSeconds) {
    r.pass = false;
    r.notes.push_back("over the time limit of " + std::to_string(limitSeconds) + " s");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", seconds);
  std::cout << "criterion " << number << ": " << (r.pass ? "PASS" : "FAIL") << "  [" << timing << "]  " << title << "\n";
  for (const auto& n : r.notes) std::cout << "    " << n << "\n";
  if (!r.pass) ++failures;
}

Polynomial z(int i) { return Polynomial::variable(4, i - 1); }

Ideal ideal(std::string_view text) { return parseIdeal(text); }

Ideal unionOf(const std::vector<Ideal>& parts) {
  Ideal out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = idealProduct(out, parts[i]);
  return out;
}

bool projectiveOfDegree(const OneForm& form, int degree) {
  const ProjectivityReport p = checkProjective(form);
  return p.passed() && *p.foliationDegree == degree;
}

// Seeded sampling of small integer data.
class Data {
 public:
  explicit Data(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  int nonzero() {
    int v = 0;
    while (v == 0) v = uniform(-3, 3);
    return v;
  }

  std::vector<Polynomial> independentLines(int count) {
    while (true) {
      std::vector<Polynomial> lines;
      Matrix m(count, 4);
      for (int r = 0; r < count; ++r) {
        Polynomial l(4);
        for (int c = 0; c < 4; ++c) {
          m(r, c) = uniform(-3, 3);
          l += z(c + 1) * m(r, c);
        }
        lines.push_back(l);
      }
      if (m.rank() == count) return lines;
    }
  }

  Polynomial quadricIn(const std::vector<Polynomial>& vars) {
    Polynomial out(4);
    while (out.isZero()) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i; j < vars.size(); ++j) out += vars[i] * vars[j] * Scalar(uniform(-3, 3));
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

int main() {
  const OneForm omega = namedForm("omega").form;
  const OneForm w1 = namedForm("omega1").form;
  const OneForm w2 = namedForm("omega2").form;
  const OneForm w3 = namedForm("omega3").form;

  criterion(1, "omega and its partial sums are projective of degree 2 and integrable; omega = omega1 + omega2 + omega3", 1,
            [&](Result& r) {
              for (const char* key : {"omega", "omega12", "omega23", "omega13"}) {
                const OneForm f = namedForm(key).form;
                r.require(projectiveOfDegree(f, 2), std::string(key) + " projective of degree 2");
                r.require(isIntegrable(f).integrable, std::string(key) + " integrable");
              }
              r.require(omega == w1 + w2 + w3, "omega = omega1 + omega2 + omega3");
            });

  criterion(2, "torus action: eigencomponent splits, limits, destabilizing subgroup and fixing lattice", 1, [&](Result& r) {
    struct Case {
      WeightVector n;
      const OneForm* top;
      OneForm rest;
    };
    const std::vector<Case> cases = {{WeightVector(3, -1, -1, -1), &w1, w2 + w3},
                                     {WeightVector(1, 1, -1, -1), &w2, w1 + w3},
                                     {WeightVector(1, 1, 1, -3), &w3, w1 + w2}};
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const Case& c = cases[i];
      const std::string label = "lambda" + std::to_string(i + 1);
      const WeightDecomposition parts = weightDecompose(omega, c.n);
      r.require(parts.size() == 2 && parts.rbegin()->second == *c.top && parts.begin()->second == c.rest,
                label + " eigencomponent split");
      r.require(limitPoint(omega, c.n, LimitDirection::kToInfinity) == *c.top, label + " limit at infinity");
      r.require(limitPoint(omega, c.n, LimitDirection::kToZero) == c.rest, label + " limit at zero");
    }
    const DestabilizingReport d = destabilizingCheck(omega, WeightVector(3, 1, -1, -3));
    r.require(d.drivenToZero && d.minWeight == 2, "destabilizing check gives (true, 2)");
    const auto lattice = fixingLattice(omega);
    r.require(lattice.size() == 1 && (lattice[0] == WeightVector(3, 1, -1, -3) || lattice[0] == -WeightVector(3, 1, -1, -3)),
              "fixing lattice generated by (3,1,-1,-3)");
  });

  criterion(3, "singular sets of omega and the three partial sums equal their printed unions", 60, [&](Result& r) {
    const std::vector<std::pair<const char*, Ideal>> rows = {
        {"omega", unionOf({ideal("ideal(z1, 2*z2*z4 - z3^2)"), ideal("ideal(z1, z2)"),
                           ideal("ideal(2*z3^2 - 3*z2*z4, 3*z1*z4 - z2*z3, z2^2 - 2*z1*z3)")})},
        {"omega12", unionOf({ideal("ideal(z1, z2)"), ideal("ideal(z1, z4)"), ideal("ideal(z4, 2*z1*z3 - z2^2)")})},
        {"omega13", unionOf({ideal("ideal(z1, z2)"), ideal("ideal(z1, z3)"), ideal("ideal(z3, z4)")})},
        {"omega23", unionOf({ideal("ideal(z1, z2)"), ideal("ideal(z2, z3)"), ideal("ideal(z1, 2*z2*z4 - z3^2)")})},
    };
    for (const auto& [key, claimed] : rows) {
      const VarietyComparison c = varietyEquals(singularIdeal(namedForm(key).form), claimed);
      r.require(c.equal(), std::string("Sing(") + key + ") relation " + toString(c.relation));
    }
  });

  criterion(4, "rational first integrals of the four forms and of the three reduced summands", 5, [&](Result& r) {
    const std::vector<std::tuple<OneForm, const char*, const char*>> rows = {
        {omega, "(3*z4*z1^2 - 3*z1*z2*z3 + z2^3)^2", "(2*z1*z3 - z2^2)^3"},
        {namedForm("omega12").form, "z1^4*z4^2", "(2*z1*z3 - z2^2)^3"},
        {namedForm("omega13").form, "(z1*z4 - z2*z3)^2", "z1*z3^3"},
        {namedForm("omega23").form, "z1^2*(2*z2*z4 - z3^2)", "z2^4"},
        {dividePolynomialFactor(w1, z(1)), "z1*z4^2", "z3^3"},
        {dividePolynomialFactor(w2, z(2)), "z1^2*z4", "z2^3"},
        {dividePolynomialFactor(w3, z(3)), "z2^2", "z1*z3"},
    };
    for (const auto& [form, f, g] : rows) {
      r.require(isFirstIntegral(form, RationalPair(parsePolynomial(f), parsePolynomial(g))).holds,
                std::string(f) + " / " + g);
    }
  });

  criterion(5, "logarithmic decompositions of the three partial sums hold up to a scalar", 2, [&](Result& r) {
    const std::vector<std::tuple<const char*, LogData>> rows = {
        {"omega12", LogData({z(1), z(4), parsePolynomial("2*z1*z3 - z2^2")}, {4, 2, -3})},
        {"omega13", LogData({parsePolynomial("z1*z4 - z2*z3"), z(1), z(3)}, {2, -1, -3})},
        {"omega23", LogData({z(2), z(1), parsePolynomial("2*z2*z4 - z3^2")}, {4, -2, -1})},
    };
    for (const auto& [key, data] : rows) {
      const LogDecompositionReport d = verifyLogDecomposition(namedForm(key).form, data);
      r.require(d.matches, std::string(key) + " proportional to its logarithmic product");
      if (d.matches) r.note(std::string(key) + " ratio " + toString(*d.ratio));
    }
  });

  criterion(6, "logarithmic forms on four planes and the three boundary shapes on seeded data", 60, [&](Result& r) {
    Data data(20240611);
    const auto lines = data.independentLines(4);
    std::vector<Scalar> lambdas = {0, 0, 0, 0};
    while (lambdas[3] == 0) {
      lambdas = {data.nonzero(), data.nonzero(), data.nonzero()};
      lambdas.push_back(-(lambdas[0] + lambdas[1] + lambdas[2]));
    }
    const OneForm log4 = buildLogForm(LogData(lines, lambdas));
    const Ideal sing = singularIdeal(log4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        r.require(varietyContains(sing, Ideal(4, {lines[i], lines[j]})),
                  "Sing contains V(L" + std::to_string(i + 1) + ", L" + std::to_string(j + 1) + ")");
      }
    }

    auto shapeCheck = [&r](const std::string& label, const BoundaryLogData& d, const Ideal& claimed) {
      const OneForm form = buildBoundaryLogForm(d);
      r.require(projectiveOfDegree(form, 2) && isIntegrable(form).integrable, label + " projective and integrable");
      const VarietyComparison c = varietyEquals(singularIdeal(form), claimed);
      r.require(c.equal(), label + " Sing relation " + toString(c.relation));
    };
    {
      const auto b = data.independentLines(4);
      Scalar l1 = 0;
      Scalar l2 = 0;
      while (l1 + l2 == 0) {
        l1 = data.nonzero();
        l2 = data.nonzero();
      }
      BoundaryLogData d{1, {b[0], b[1], b[2]}, {l1, l2, -(l1 + l2)}, b[3]};
      shapeCheck("shape 1", d,
                 unionOf({Ideal(4, {b[0], b[1]}), Ideal(4, {b[0], b[2]}), Ideal(4, {b[1], b[2]}), Ideal(4, {b[0], b[3]})}));
    }
    {
      const auto b = data.independentLines(4);
      const int k = data.nonzero();
      const Polynomial alpha = data.quadricIn({b[0], b[2], b[3]});
      BoundaryLogData d{2, {b[0], b[1]}, {Scalar(k), Scalar(-k)}, alpha};
      shapeCheck("shape 2", d, unionOf({Ideal(4, {b[0], b[1]}), Ideal(4, {b[0], alpha})}));
    }
    {
      const auto b = data.independentLines(4);
      const Polynomial alpha = b[0] * b[0] * b[1] * Scalar(data.nonzero()) + b[2] * b[2] * b[3] * Scalar(data.nonzero());
      BoundaryLogData d{3, {b[0]}, {Scalar(0)}, alpha};
      shapeCheck("shape 3", d, Ideal(4, {b[0], alpha}));
    }
    r.note("shape 2 uses alpha free of L2 and shape 3 uses alpha = L1^2 M + N^2 K; for generic alpha both shapes "
           "have extra isolated singular points (recorded as errata by the claim ledger)");
  });

  criterion(7, "the three cubic forms: projective, integrable, Sing = V(z2, z3), first integral f/z3^3", 30, [&](Result& r) {
    const Ideal line = ideal("ideal(z2, z3)");
    for (int i = 1; i <= 3; ++i) {
      const OneForm form = namedForm("omegaF" + std::to_string(i)).form;
      const std::string label = "cubic " + std::to_string(i);
      r.require(projectiveOfDegree(form, 2), label + " projective of degree 2");
      r.require(isIntegrable(form).integrable, label + " integrable");
      r.require(varietyEquals(singularIdeal(form), line).equal(), label + " Sing = V(z2, z3)");
      r.require(isFirstIntegral(form, RationalPair(theoremCubic(i), z(3).pow(3))).holds, label + " first integral");
    }
    const Matrix projection{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    const auto ratio = projectiveEqual(pullbackFromP2(namedForm("nu1").form, projection), namedForm("omegaF3").form);
    r.require(ratio.has_value(), "third cubic form is the pullback of the derived nu1");
    if (ratio) r.note("pullback ratio " + toString(*ratio));
  });

  criterion(8, "rational family for s = 3, 4, 5 and a = 0, 1", 60, [&](Result& r) {
    Data data(7);
    const Ideal line = ideal("ideal(z2, z3)");
    for (int s = 3; s <= 5; ++s) {
      std::vector<Scalar> coeffs;
      for (int i = 0; i < s; ++i) coeffs.emplace_back(data.uniform(-3, 3));
      coeffs.emplace_back(data.nonzero());
      for (int a = 0; a <= 1; ++a) {
        const RationalFamilyMember m = familyRational(s, a, coeffs);
        const std::string label = "s=" + std::to_string(s) + " a=" + std::to_string(a);
        r.require(projectiveOfDegree(m.form, s), label + " projective of degree s");
        r.require(isIntegrable(m.form).integrable, label + " integrable");
        r.require(isFirstIntegral(m.form, m.integral).holds, label + " first integral");
        r.require(varietyEquals(singularIdeal(m.form), line).equal(), label + " Sing = V(z2, z3)");
        if (a == 0) r.require(m.form[3].isZero(), label + " dz4 coefficient is zero");
      }
    }
  });

  criterion(9, "logarithmic family on three seeded parameter sets", 60, [&](Result& r) {
    Data data(11);
    const Ideal line = ideal("ideal(z2, z3)");
    for (int n = 0; n < 3; ++n) {
      const int s1 = data.uniform(1, 2);
      const int s2 = data.uniform(1, 2);
      const int s3 = data.uniform(1, 2);
      const int k = data.uniform(1, 2);
      const int total = k * (s1 + s2 + s3);
      const int l2 = data.uniform(1, total - 1);
      const int l3 = total - l2;
      const LogFamilyMember m = familyLogarithmic(s1, s2, s3, Scalar(data.uniform(1, 3)), {-k, l2, l3});
      const std::string label = "(" + std::to_string(s1) + "," + std::to_string(s2) + "," + std::to_string(s3) +
                                "), lambda = (" + std::to_string(-k) + "," + std::to_string(l2) + "," +
                                std::to_string(l3) + ")";
      r.require(isIntegrable(m.form).integrable, label + " integrable");
      r.require(varietyEquals(singularIdeal(m.form), line).equal(), label + " Sing = V(z2, z3)");
      const Polynomial den = z(2).pow(static_cast<unsigned>(l2)) * z(3).pow(static_cast<unsigned>(l3));
      r.require(isFirstIntegral(m.form, RationalPair(m.fa.pow(static_cast<unsigned>(k)), den)).holds,
                label + " first integral");
      r.note(label + ": first integral degree " + std::to_string(den.totalDegree()) + " = lambda2 + lambda3 (printed " +
             "formula lambda1 + lambda2 gives " + std::to_string(l2 - k) + ")");
    }
  });

  criterion(10, "errata detection on the plane forms", 1, [&](Result& r) {
    r.require(radialContraction(namedForm("nu2").form).isZero(), "nu2 radial contraction is zero");
    for (const char* key : {"nu1-printed", "nu3", "nu4"}) {
      const Polynomial c = radialContraction(namedForm(key).form);
      r.require(!c.isZero(), std::string(key) + " radial contraction is nonzero");
      r.note(std::string(key) + ": " + printCanonical(c));
    }
    r.require(radialContraction(namedForm("nu4").form) == parsePolynomial("-2*z1*z2^3", 3), "nu4 witness -2*z1*z2^3");
    const OneForm nu3 = namedForm("nu3").form;
    const auto completed = completeFromEuler(0, nu3[0], 1, nu3[1], 2);
    r.require(completed && (*completed)[2] == parsePolynomial("z2*(z2^2 + z3^2 - z1*z2)", 3),
              "nu3 completes with A3 = z2 (z2^2 + z3^2 - z1 z2)");
    const OneForm nu4 = namedForm("nu4").form;
    r.require(!completeFromEuler(0, nu4[0], 1, nu4[1], 2), "nu4 has no Euler completion");
  });

  criterion(11, "dimension formula at s = 2 is 44", 1, [](Result& r) { r.require(dimensionFormula(2) == 44, "44"); });

  criterion(12, "property suites, 500 seeded cases each", 60, [](Result& r) {
    for (const auto& o : properties::runAll(1, 500)) {
      r.require(o.failures == 0, o.name + ": " + o.firstFailure);
      r.note(o.name + ": " + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases));
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
