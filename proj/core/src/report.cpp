#include "folcheck/report.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <utility>

#include "folcheck/catalog.hpp"
#include "folcheck/integrals.hpp"
#include "folcheck/textio.hpp"
#include "folcheck/torus.hpp"

namespace folcheck {

namespace {

struct Outcome {
  ClaimStatus status;
  std::optional<std::string> witness;
};

Outcome verified(std::optional<std::string> witness = std::nullopt) { return {ClaimStatus::kVerified, std::move(witness)}; }
Outcome refuted(std::string witness) { return {ClaimStatus::kRefuted, std::move(witness)}; }
Outcome erratum(std::string witness) { return {ClaimStatus::kErratum, std::move(witness)}; }

// Collects failed sub-checks of one ledger item.
class Checks {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  Outcome result(std::optional<std::string> witness = std::nullopt) const {
    if (failures_.empty()) return verified(std::move(witness));
    std::string text;
    for (const auto& f : failures_) text += (text.empty() ? "" : "; ") + f;
    return refuted(text);
  }

 private:
  std::vector<std::string> failures_;
};

// Small deterministic integer sampler; modulo bias is irrelevant here.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  int nonzero(int bound) {
    int v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }

  Polynomial linear() {
    Polynomial out(4);
    while (out.isZero()) {
      out = Polynomial(4);
      for (int i = 0; i < 4; ++i) out += Polynomial::variable(4, i) * Scalar(uniform(-3, 3));
    }
    return out;
  }

  // Linear forms with linearly independent coefficient vectors.
  std::vector<Polynomial> independentLinear(int count) {
    while (true) {
      std::vector<Polynomial> forms;
      Matrix m(count, 4);
      for (int r = 0; r < count; ++r) {
        forms.push_back(linear());
        for (int c = 0; c < 4; ++c) m(r, c) = forms.back().coefficient(Monomial::variable(c));
      }
      if (m.rank() == count) return forms;
    }
  }

  // Random homogeneous polynomial of the given degree in the given linear forms.
  Polynomial form(int degree, const std::vector<Polynomial>& vars) {
    Polynomial out(4);
    while (out.isZero()) {
      out = Polynomial(4);
      addTerms(out, degree, vars, 0, Polynomial::constant(4, 1));
    }
    return out;
  }

  // Nonzero residues with prescribed weighted sum zero: sum w_i l_i = 0.
  std::vector<Scalar> residues(const std::vector<int>& weights) {
    while (true) {
      std::vector<Scalar> out;
      Scalar partial = 0;
      for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        out.emplace_back(nonzero(3));
        partial += out.back() * weights[i];
      }
      const Scalar last = -partial / weights.back();
      if (last != 0) {
        out.push_back(last);
        return out;
      }
    }
  }

 private:
  void addTerms(Polynomial& out, int degree, const std::vector<Polynomial>& vars, std::size_t from,
                const Polynomial& prefix) {
    if (degree == 0) {
      out += prefix * Scalar(uniform(-3, 3));
      return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) addTerms(out, degree - 1, vars, i, prefix * vars[i]);
  }

  std::mt19937_64 rng_;
};

Polynomial z(int index, int ambient = 4) { return Polynomial::variable(ambient, index - 1); }

std::string weightText(const WeightVector& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + ")";
}

std::string joinIdeals(const std::vector<Ideal>& parts) {
  std::string out = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + printCanonical(parts[i]);
  return out + ")";
}

Ideal unionOf(const std::vector<Ideal>& parts) {
  Ideal out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = idealProduct(out, parts[i]);
  return out;
}

class Ledger {
 public:
  explicit Ledger(const ReportOptions& options) : options_(options) {}

  void add(std::string id, std::string description, const std::function<Outcome()>& check) {
    ClaimRecord record;
    record.id = std::move(id);
    record.description = std::move(description);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check();
      record.status = o.status;
      record.witness = std::move(o.witness);
    } catch (const BudgetExceeded& e) {
      record.status = ClaimStatus::kInconclusive;
      record.witness = e.what();
    } catch (const std::exception& e) {
      record.status = ClaimStatus::kRefuted;
      record.witness = std::string("check raised: ") + e.what();
    }
    record.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    records_.push_back(std::move(record));
  }

  // Variety comparison that turns an exhausted budget into an exception so
  // the record is marked inconclusive.
  VarietyComparison compare(const Ideal& left, const Ideal& right) const {
    VarietyComparison c = varietyEquals(left, right, options_.budget);
    if (c.relation == VarietyRelation::kInconclusive) throw BudgetExceeded(c.note.value_or("budget exhausted"));
    return c;
  }

  Outcome singEquals(const OneForm& form, const Ideal& claimed) const {
    const VarietyComparison c = compare(singularIdeal(form), claimed);
    if (c.equal()) return verified();
    return refuted(std::string("relation ") + toString(c.relation) + ", failing generator " +
                   (c.witness ? printCanonical(*c.witness) : "?"));
  }

  std::vector<ClaimRecord> take() { return std::move(records_); }

 private:
  ReportOptions options_;
  std::vector<ClaimRecord> records_;
};

Outcome projectiveAndIntegrable(const OneForm& form, int degree) {
  Checks checks;
  const ProjectivityReport p = checkProjective(form);
  checks.require(p.homogeneous, "coefficients not of one degree");
  checks.require(p.radialZero, "radial contraction " + printCanonical(p.contraction));
  checks.require(p.foliationDegree == degree, "foliation degree differs from " + std::to_string(degree));
  const IntegrabilityReport i = isIntegrable(form);
  checks.require(i.integrable, "form ^ d(form) = " + printCanonical(i.witness));
  return checks.result("degree " + std::to_string(degree));
}

Outcome firstIntegral(const OneForm& form, const Polynomial& f, const Polynomial& g) {
  const RationalPair pair(f, g);
  const FirstIntegralReport r = isFirstIntegral(form, pair);
  if (r.holds) return verified("(" + printCanonical(f) + ") / (" + printCanonical(g) + ")");
  return refuted("form ^ (g df - f dg) = " + printCanonical(r.witness));
}

Outcome logDecomposition(const OneForm& form, const LogData& data) {
  const LogDecompositionReport r = verifyLogDecomposition(form, data);
  if (r.matches) return verified("ratio " + toString(*r.ratio));
  return refuted("expanded product " + printCanonical(r.expanded) + " is not a scalar multiple");
}

void sectionOne(Ledger& ledger) {
  ledger.add("sec1-dimension-s2", "4 C(s+4,3) - C(s+5,3) - 1 at s = 2 is 44", [] {
    const Integer d = dimensionFormula(2);
    return d == 44 ? verified(d.get_str()) : refuted(d.get_str());
  });

  const OneForm nu1Printed = namedForm("nu1-printed").form;
  ledger.add("nu1-euler", "printed nu1 satisfies sum z_i A_i = 0", [&] {
    const Polynomial c = radialContraction(nu1Printed);
    return c.isZero() ? verified() : erratum(printCanonical(c));
  });
  ledger.add("nu1-derived", "foliation of (z1 z3^2 + z2^3)/z3^3 is projective of degree 2, integrable, with that first integral", [] {
    const OneForm nu1 = namedForm("nu1").form;
    Outcome o = projectiveAndIntegrable(nu1, 2);
    if (o.status != ClaimStatus::kVerified) return o;
    o = firstIntegral(nu1, parsePolynomial("z1*z3^2 + z2^3", 3), parsePolynomial("z3^3", 3));
    if (o.status != ClaimStatus::kVerified) return o;
    return verified(printCanonical(nu1));
  });
  ledger.add("nu1-sing", "derived nu1 has the single singular point (1:0:0)", [&] {
    return ledger.singEquals(namedForm("nu1").form, parseIdeal("ideal(z2, z3)", 3));
  });

  ledger.add("nu2-euler", "nu2 is projective of degree 2 and integrable", [] {
    return projectiveAndIntegrable(namedForm("nu2").form, 2);
  });
  ledger.add("nu2-sing", "nu2 has the single singular point (1:0:0)", [&] {
    return ledger.singEquals(namedForm("nu2").form, parseIdeal("ideal(z2, z3)", 3));
  });

  const OneForm nu3 = namedForm("nu3").form;
  ledger.add("nu3-euler", "printed nu3 satisfies sum z_i A_i = 0", [&] {
    const Polynomial c = radialContraction(nu3);
    return c.isZero() ? verified() : erratum(printCanonical(c));
  });
  ledger.add("nu3-euler-completion", "printed (A1, A2) of nu3 admit an Euler completion A3", [&] {
    const auto completed = completeFromEuler(0, nu3[0], 1, nu3[1], 2);
    if (!completed) return refuted("z3 does not divide z1 A1 + z2 A2");
    return verified("A3 = " + printCanonical((*completed)[2]));
  });
  ledger.add("nu3-euler-sing", "the Euler-completed nu3 has a single singular point", [&] {
    const VarietyComparison c = ledger.compare(singularIdeal(namedForm("nu3-euler").form), parseIdeal("ideal(z2, z3)", 3));
    if (c.equal()) return verified();
    return erratum(std::string("relation ") + toString(c.relation) + "; (1:1:0) is also singular, so the completion is not the intended nu3");
  });

  const OneForm nu4 = namedForm("nu4").form;
  ledger.add("nu4-euler", "printed nu4 satisfies sum z_i A_i = 0", [&] {
    const Polynomial c = radialContraction(nu4);
    return c.isZero() ? verified() : erratum(printCanonical(c));
  });
  ledger.add("nu4-euler-completion", "printed (A1, A2) of nu4 admit no Euler completion", [&] {
    const auto completed = completeFromEuler(0, nu4[0], 1, nu4[1], 2);
    if (completed) return refuted("completion exists: A3 = " + printCanonical((*completed)[2]));
    const Polynomial known = z(1, 3) * nu4[0] + z(2, 3) * nu4[1];
    return verified("z1 A1 + z2 A2 = " + printCanonical(known) + " is not divisible by z3");
  });
}

void theoremTwoOne(Ledger& ledger) {
  const OneForm omega = namedForm("omega").form;
  const OneForm w1 = namedForm("omega1").form;
  const OneForm w2 = namedForm("omega2").form;
  const OneForm w3 = namedForm("omega3").form;

  ledger.add("thm2.1-decomposition", "omega = omega1 + omega2 + omega3", [&] {
    return omega == w1 + w2 + w3 ? verified() : refuted(printCanonical(omega - (w1 + w2 + w3)));
  });
  for (const auto& [key, label] : std::vector<std::pair<std::string, std::string>>{
           {"omega", "omega"}, {"omega12", "omega1 + omega2"}, {"omega23", "omega2 + omega3"}, {"omega13", "omega1 + omega3"}}) {
    ledger.add("thm2.1-" + key + "-integrable", label + " is projective of degree 2 and integrable",
               [key] { return projectiveAndIntegrable(namedForm(key).form, 2); });
  }

  ledger.add("thm2.1-weights", "diag(t^n) . omega_i = t^(n_i - n_(i+1)) omega_i for n = (2,-1,3,-4), t = 3", [&] {
    const WeightVector n(2, -1, 3, -4);
    const Matrix g = n.at(Scalar(3));
    Checks checks;
    const std::array<const OneForm*, 3> parts = {&w1, &w2, &w3};
    for (int i = 0; i < 3; ++i) {
      long e = n[i] - n[i + 1];
      Scalar factor = 1;
      for (long k = 0; k < std::abs(e); ++k) factor *= e > 0 ? Scalar(3) : Scalar(1, 3);
      checks.require(pullbackLinear(*parts[static_cast<std::size_t>(i)], g) == factor * *parts[static_cast<std::size_t>(i)],
                     "omega" + std::to_string(i + 1) + " is not scaled by t^" + std::to_string(e));
    }
    return checks.result();
  });

  struct Subgroup {
    const char* id;
    WeightVector n;
    int i;
  };
  const std::array<const OneForm*, 3> parts = {&w1, &w2, &w3};
  for (const Subgroup& sg : {Subgroup{"lambda1", WeightVector(3, -1, -1, -1), 0},
                             Subgroup{"lambda2", WeightVector(1, 1, -1, -1), 1},
                             Subgroup{"lambda3", WeightVector(1, 1, 1, -3), 2}}) {
    const OneForm& wi = *parts[static_cast<std::size_t>(sg.i)];
    OneForm rest(4);
    for (int j = 0; j < 3; ++j) {
      if (j != sg.i) rest += *parts[static_cast<std::size_t>(j)];
    }
    const std::string name = "omega" + std::to_string(sg.i + 1);
    ledger.add(std::string("thm2.1-") + sg.id + "-split",
               std::string("weights of ") + weightText(sg.n) + " split omega into " + name + " and the other two summands",
               [&, sg, wi, rest] {
                 const WeightDecomposition parts2 = weightDecompose(omega, sg.n);
                 std::string text;
                 for (const auto& [w, p] : parts2) text += (text.empty() ? "" : ", ") + std::to_string(w);
                 Checks checks;
                 checks.require(parts2.size() == 2, "expected two eigencomponents");
                 checks.require(parts2.size() == 2 && parts2.rbegin()->second == wi, "top component differs from " + name);
                 checks.require(parts2.size() == 2 && parts2.begin()->second == rest, "bottom component differs");
                 return checks.result("weights {" + text + "}");
               });
    ledger.add(std::string("thm2.1-") + sg.id + "-limits",
               "t -> infinity gives " + name + ", t -> 0 gives the sum of the other two", [&, sg, wi, rest] {
                 Checks checks;
                 checks.require(limitPoint(omega, sg.n, LimitDirection::kToInfinity) == wi, "limit at infinity differs");
                 checks.require(limitPoint(omega, sg.n, LimitDirection::kToZero) == rest, "limit at zero differs");
                 return checks.result();
               });
  }

  ledger.add("thm2.1-fix-scaling", "diag(t^3, t, t^-1, t^-3) . omega = t^2 omega at t = 2", [&] {
    const OneForm moved = pullbackLinear(omega, WeightVector(3, 1, -1, -3).at(Scalar(2)));
    const auto ratio = projectiveEqual(omega, moved);
    if (ratio && *ratio == 4) return verified("ratio 4");
    return refuted(ratio ? "ratio " + toString(*ratio) : std::string("not a multiple"));
  });
  ledger.add("thm2.1-destabilize", "all weights of omega under (3,1,-1,-3) are positive, so t . omega -> 0", [&] {
    const DestabilizingReport r = destabilizingCheck(omega, WeightVector(3, 1, -1, -3));
    if (r.drivenToZero && r.minWeight == 2) return verified("minimal weight 2");
    return refuted("minimal weight " + std::to_string(r.minWeight));
  });
  ledger.add("thm2.1-fix-lattice", "the diagonal subgroups fixing omega are the multiples of (3,1,-1,-3)", [&] {
    const auto basis = fixingLattice(omega);
    std::string text;
    for (const auto& b : basis) text += (text.empty() ? "" : " ") + weightText(b);
    if (basis.size() == 1 && (basis[0] == WeightVector(3, 1, -1, -3) || basis[0] == -WeightVector(3, 1, -1, -3))) {
      return verified(text);
    }
    return refuted("lattice basis " + text);
  });
  ledger.add("thm2.1-diagonal-orbit", "diag(a) . omega = a1/a2 omega1 + a2/a3 omega2 + a3/a4 omega3 for a = (2, 3, 1/5, 5/6)", [&] {
    const std::vector<Scalar> a = {Scalar(2), Scalar(3), Scalar(1, 5), Scalar(5, 6)};
    const OneForm moved = pullbackLinear(omega, Matrix::diagonal(a));
    const OneForm expected = (a[0] / a[1]) * w1 + (a[1] / a[2]) * w2 + (a[2] / a[3]) * w3;
    return moved == expected ? verified() : refuted(printCanonical(moved - expected));
  });
}

void sectionTwoTables(Ledger& ledger) {
  struct Row {
    std::string key;
    std::string label;
    std::vector<std::string> components;
    std::string numerator;
    std::string denominator;
  };
  const std::vector<Row> rows = {
      {"omega", "omega",
       {"ideal(z1, 2*z2*z4 - z3^2)", "ideal(z1, z2)", "ideal(2*z3^2 - 3*z2*z4, 3*z1*z4 - z2*z3, z2^2 - 2*z1*z3)"},
       "(3*z4*z1^2 - 3*z1*z2*z3 + z2^3)^2", "(2*z1*z3 - z2^2)^3"},
      {"omega12", "omega1 + omega2", {"ideal(z1, z2)", "ideal(z1, z4)", "ideal(z4, 2*z1*z3 - z2^2)"},
       "z1^4*z4^2", "(2*z1*z3 - z2^2)^3"},
      {"omega13", "omega1 + omega3", {"ideal(z1, z2)", "ideal(z1, z3)", "ideal(z3, z4)"},
       "(z1*z4 - z2*z3)^2", "z1*z3^3"},
      {"omega23", "omega2 + omega3", {"ideal(z1, z2)", "ideal(z2, z3)", "ideal(z1, 2*z2*z4 - z3^2)"},
       "z1^2*(2*z2*z4 - z3^2)", "z2^4"},
  };
  for (const Row& row : rows) {
    std::vector<Ideal> parts;
    for (const auto& c : row.components) parts.push_back(parseIdeal(c));
    ledger.add("sing-" + row.key, "Sing(" + row.label + ") = " + joinIdeals(parts), [&ledger, row, parts] {
      return ledger.singEquals(namedForm(row.key).form, unionOf(parts));
    });
  }
  for (const Row& row : rows) {
    ledger.add("fi-" + row.key, row.label + " has the rational first integral " + row.numerator + " / " + row.denominator,
               [row] {
                 return firstIntegral(namedForm(row.key).form, parsePolynomial(row.numerator),
                                      parsePolynomial(row.denominator));
               });
  }

  ledger.add("log-omega12", "omega1 + omega2 is a multiple of z1 z4 (2z1z3 - z2^2) (4 dz1/z1 + 2 dz4/z4 - 3 dq/q)", [] {
    return logDecomposition(namedForm("omega12").form,
                            LogData({z(1), z(4), parsePolynomial("2*z1*z3 - z2^2")}, {Scalar(4), Scalar(2), Scalar(-3)}));
  });
  ledger.add("log-omega13", "omega1 + omega3 is a multiple of z1 z3 (z1z4 - z2z3) (2 dq/q - dz1/z1 - 3 dz3/z3)", [] {
    return logDecomposition(namedForm("omega13").form,
                            LogData({parsePolynomial("z1*z4 - z2*z3"), z(1), z(3)}, {Scalar(2), Scalar(-1), Scalar(-3)}));
  });
  ledger.add("log-omega23", "omega2 + omega3 is a multiple of z2 z1 (2z2z4 - z3^2) (4 dz2/z2 - 2 dz1/z1 - dq/q)", [] {
    return logDecomposition(namedForm("omega23").form,
                            LogData({z(2), z(1), parsePolynomial("2*z2*z4 - z3^2")}, {Scalar(4), Scalar(-2), Scalar(-1)}));
  });

  struct Reduced {
    int i;
    std::string printed;
    std::vector<std::string> components;
    std::string numerator;
    std::string denominator;
  };
  const std::vector<Reduced> reduced = {
      {1, "-z3*z4*dz1 + 3*z1*z4*dz3 - 2*z3*z1*dz4", {"ideal(z1, z3)", "ideal(z1, z4)", "ideal(z3, z4)"}, "z1*z4^2", "z3^3"},
      {2, "2*z2*z4*dz1 - 3*z1*z4*dz2 + z2*z1*dz4", {"ideal(z1, z2)", "ideal(z1, z4)", "ideal(z2, z4)"}, "z1^2*z4", "z2^3"},
      {3, "-z2*z3*dz1 + 2*z3*z1*dz2 - z1*z2*dz3", {"ideal(z1, z2)", "ideal(z1, z3)", "ideal(z2, z3)"}, "z2^2", "z1*z3"},
  };
  for (const Reduced& r : reduced) {
    const std::string name = "omega" + std::to_string(r.i);
    const std::string quotient = name + "/z" + std::to_string(r.i);
    ledger.add(name + "-div", name + " = z" + std::to_string(r.i) + " (" + r.printed + ")", [r, name] {
      const OneForm q = dividePolynomialFactor(namedForm(name).form, z(r.i));
      const OneForm printed = parseOneForm(r.printed);
      return q == printed ? verified(printCanonical(q)) : refuted(printCanonical(q));
    });
    std::vector<Ideal> parts;
    for (const auto& c : r.components) parts.push_back(parseIdeal(c));
    ledger.add(name + "-sing", "Sing(" + quotient + ") = " + joinIdeals(parts), [&ledger, r, name, parts] {
      return ledger.singEquals(dividePolynomialFactor(namedForm(name).form, z(r.i)), unionOf(parts));
    });
    ledger.add(name + "-fi", quotient + " has the rational first integral " + r.numerator + " / " + r.denominator,
               [r, name] {
                 return firstIntegral(dividePolynomialFactor(namedForm(name).form, z(r.i)), parsePolynomial(r.numerator),
                                      parsePolynomial(r.denominator));
               });
  }
}

void sectionThree(Ledger& ledger, Sampler& sampler) {
  {
    const std::vector<Polynomial> lines = sampler.independentLinear(4);
    const std::vector<Scalar> lambdas = sampler.residues({1, 1, 1, 1});
    ledger.add("sec3-l1111-sing", "seeded L(1,1,1,1) form: integrable, Sing = union of the six lines V(Li, Lj)",
               [&ledger, lines, lambdas] {
                 const OneForm form = buildLogForm(LogData(lines, lambdas));
                 Outcome o = projectiveAndIntegrable(form, 2);
                 if (o.status != ClaimStatus::kVerified) return o;
                 std::vector<Ideal> parts;
                 for (std::size_t i = 0; i < 4; ++i) {
                   for (std::size_t j = i + 1; j < 4; ++j) parts.push_back(Ideal(4, {lines[i], lines[j]}));
                 }
                 Checks checks;
                 for (const auto& part : parts) {
                   checks.require(varietyContains(singularIdeal(form), part), "Sing misses " + printCanonical(part));
                 }
                 if (checks.result().status != ClaimStatus::kVerified) return checks.result();
                 o = ledger.singEquals(form, unionOf(parts));
                 if (o.status != ClaimStatus::kVerified) return o;
                 return verified(printCanonical(form));
               });
  }
  {
    const std::vector<Polynomial> lines = sampler.independentLinear(2);
    const Polynomial quadric = sampler.form(2, {z(1), z(2), z(3), z(4)});
    std::vector<Scalar> lambdas = sampler.residues({1, 1, 2});
    ledger.add("sec3-l112-sing", "seeded L(1,1,2) form: Sing = union of V(fi, fj) and Sing(df3)",
               [&ledger, lines, quadric, lambdas] {
                 const OneForm form = buildLogForm(LogData({lines[0], lines[1], quadric}, lambdas));
                 Outcome o = projectiveAndIntegrable(form, 2);
                 if (o.status != ClaimStatus::kVerified) return o;
                 std::vector<Polynomial> partials;
                 for (int i = 0; i < 4; ++i) partials.push_back(partialDerivative(quadric, i));
                 const std::vector<Ideal> parts = {Ideal(4, {lines[0], lines[1]}), Ideal(4, {lines[0], quadric}),
                                                   Ideal(4, {lines[1], quadric}), Ideal(4, partials)};
                 const VarietyComparison c = ledger.compare(singularIdeal(form), unionOf(parts));
                 if (c.equal()) return verified(printCanonical(form));
                 const std::string detail = std::string("relation ") + toString(c.relation) + ", failing generator " +
                                            (c.witness ? printCanonical(*c.witness) : "?");
                 // The logarithmic form also vanishes at the critical points of
                 // f1^l1 f2^l2 f3^l3 off the divisor, which are isolated.
                 if (c.relation == VarietyRelation::kRightInLeft) {
                   return erratum(detail + "; extra isolated zeros off f1 f2 f3 = 0, form " + printCanonical(form));
                 }
                 return refuted(detail);
               });
  }

  auto boundary = [&ledger](const BoundaryLogData& data, const std::vector<Ideal>& parts, bool expectExtra) {
    const OneForm form = buildBoundaryLogForm(data);
    Outcome o = projectiveAndIntegrable(form, 2);
    if (o.status != ClaimStatus::kVerified) return o;
    const VarietyComparison c = ledger.compare(singularIdeal(form), unionOf(parts));
    if (c.equal()) return verified(printCanonical(form));
    const std::string detail = std::string("relation ") + toString(c.relation) + ", failing generator " +
                               (c.witness ? printCanonical(*c.witness) : "?") + ", form " + printCanonical(form);
    if (expectExtra && c.relation == VarietyRelation::kRightInLeft) return erratum(detail);
    return refuted(detail);
  };

  {
    const std::vector<Polynomial> basis = sampler.independentLinear(4);
    BoundaryLogData data{1, {basis[0], basis[1], basis[2]}, sampler.residues({1, 1, 1}), basis[3]};
    const auto& l = data.lines;
    const std::vector<Ideal> parts = {Ideal(4, {l[0], l[1]}), Ideal(4, {l[0], l[2]}), Ideal(4, {l[1], l[2]}),
                                      Ideal(4, {l[0], data.alpha})};
    ledger.add("sec3-shape1-sing", "seeded shape 1 boundary form: Sing = V(L1,L2) u V(L1,L3) u V(L2,L3) u V(L1,alpha)",
               [=] { return boundary(data, parts, false); });
  }
  {
    // alpha a quadric in L1 and two further coordinates, not involving L2.
    const std::vector<Polynomial> basis = sampler.independentLinear(4);
    const int k = sampler.nonzero(3);
    BoundaryLogData data{2, {basis[0], basis[1]}, {Scalar(k), Scalar(-k)}, sampler.form(2, {basis[0], basis[2], basis[3]})};
    const std::vector<Ideal> parts = {Ideal(4, {data.lines[0], data.lines[1]}), Ideal(4, {data.lines[0], data.alpha})};
    ledger.add("sec3-shape2-sing", "seeded shape 2 boundary form, alpha free of L2: Sing = V(L1,L2) u V(L1,alpha)",
               [=] { return boundary(data, parts, false); });
  }
  {
    const std::vector<Polynomial> lines = sampler.independentLinear(2);
    const int k = sampler.nonzero(3);
    BoundaryLogData data{2, lines, {Scalar(k), Scalar(-k)}, sampler.form(2, {z(1), z(2), z(3), z(4)})};
    const std::vector<Ideal> parts = {Ideal(4, {lines[0], lines[1]}), Ideal(4, {lines[0], data.alpha})};
    ledger.add("sec3-shape2-generic", "seeded shape 2 boundary form with generic alpha: Sing = V(L1,L2) u V(L1,alpha)",
               [=] { return boundary(data, parts, true); });
  }
  {
    // alpha = L1^2 M + N^2 K keeps every singular point on L1 = 0.
    const std::vector<Polynomial> basis = sampler.independentLinear(4);
    const Polynomial alpha = basis[0] * basis[0] * basis[1] * Scalar(sampler.nonzero(3)) +
                             basis[2] * basis[2] * basis[3] * Scalar(sampler.nonzero(3));
    BoundaryLogData data{3, {basis[0]}, {Scalar(0)}, alpha};
    const std::vector<Ideal> parts = {Ideal(4, {basis[0], alpha})};
    ledger.add("sec3-shape3-sing",
               "seeded shape 3 boundary form (printed label reads Sing(omega1)), alpha = L1^2 M + N^2 K: Sing = V(L1,alpha)",
               [=] { return boundary(data, parts, false); });
  }
  {
    const Polynomial l1 = sampler.linear();
    BoundaryLogData data{3, {l1}, {Scalar(0)}, sampler.form(3, {z(1), z(2), z(3), z(4)})};
    const std::vector<Ideal> parts = {Ideal(4, {l1, data.alpha})};
    ledger.add("sec3-shape3-generic", "seeded shape 3 boundary form with generic alpha: Sing = V(L1,alpha)",
               [=] { return boundary(data, parts, true); });
  }
}

void sectionFour(Ledger& ledger, Sampler& sampler) {
  const Ideal line = parseIdeal("ideal(z2, z3)");

  ledger.add("cor41-first-integral", "the corollary form has first integral f/z3^3 and equals the second cubic form", [] {
    const OneForm form = namedForm("corollary41").form;
    const Polynomial f = theoremCubic(2);
    Outcome o = firstIntegral(form, f, z(3).pow(3));
    if (o.status != ClaimStatus::kVerified) return o;
    const auto ratio = projectiveEqual(namedForm("omegaF2").form, form);
    if (!ratio) return refuted("not a multiple of the second cubic form");
    return verified("ratio " + toString(*ratio));
  });
  ledger.add("cor41-sing", "the corollary form has the line V(z2, z3) as singular set",
             [&] { return ledger.singEquals(namedForm("corollary41").form, line); });

  for (int i = 1; i <= 3; ++i) {
    const std::string key = "omegaF" + std::to_string(i);
    const std::string id = "thm4.2-f" + std::to_string(i);
    const std::string cubic = printCanonical(theoremCubic(i));
    ledger.add(id + "-integrable", "3 f dz3 - z3 df, f = " + cubic + ": projective of degree 2 and integrable",
               [key] { return projectiveAndIntegrable(namedForm(key).form, 2); });
    ledger.add(id + "-sing", "3 f dz3 - z3 df, f = " + cubic + ": Sing = V(z2, z3)",
               [&ledger, key, line] { return ledger.singEquals(namedForm(key).form, line); });
    ledger.add(id + "-first-integral", "3 f dz3 - z3 df, f = " + cubic + ": first integral f/z3^3",
               [key, i] { return firstIntegral(namedForm(key).form, theoremCubic(i), z(3).pow(3)); });
  }
  ledger.add("thm4.2-f3-pullback-nu1", "the third cubic form is the pullback of nu1 under (z1:z2:z3:z4) -> (z1:z2:z3)", [] {
    const Matrix projection{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    const OneForm pulled = pullbackFromP2(namedForm("nu1").form, projection);
    const auto ratio = projectiveEqual(pulled, namedForm("omegaF3").form);
    return ratio ? verified("ratio " + toString(*ratio)) : refuted(printCanonical(pulled));
  });
  ledger.add("thm4.2-nu2-line", "the pullback of nu2 to 3-space has the line V(z2, z3) as singular set", [&] {
    const Matrix projection{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    return ledger.singEquals(pullbackFromP2(namedForm("nu2").form, projection), line);
  });

  for (int s = 3; s <= 5; ++s) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < s; ++i) coeffs.emplace_back(sampler.uniform(-3, 3));
    coeffs.emplace_back(sampler.nonzero(3));
    for (int a = 0; a <= 1; ++a) {
      const std::string id = "ex4.4-s" + std::to_string(s) + "-a" + std::to_string(a);
      const std::string pText = printCanonical(familyP(s, coeffs));
      ledger.add(id, "rational family, s = " + std::to_string(s) + ", a = " + std::to_string(a) + ", P = " + pText +
                         ": degree s, integrable, first integral, Sing = V(z2, z3)" +
                         (a == 0 ? ", pulled back from the plane" : ""),
                 [&ledger, s, a, coeffs, line, pText] {
                   const RationalFamilyMember m = familyRational(s, a, coeffs);
                   Outcome o = projectiveAndIntegrable(m.form, s);
                   if (o.status != ClaimStatus::kVerified) return o;
                   o = firstIntegral(m.form, m.integral.numerator(), m.integral.denominator());
                   if (o.status != ClaimStatus::kVerified) return o;
                   o = ledger.singEquals(m.form, line);
                   if (o.status != ClaimStatus::kVerified) return o;
                   if (a == 0) {
                     OneForm plane(3);
                     for (int i = 0; i < 3; ++i) plane[i] = m.form[i].withAmbient(3);
                     const Matrix projection{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
                     if (!m.form[3].isZero() || pullbackFromP2(plane, projection) != m.form) {
                       return refuted("dz4 coefficient " + printCanonical(m.form[3]));
                     }
                   }
                   return verified("P = " + pText);
                 });
    }
  }
  ledger.add("ex4.4-printed-integral",
             "printed first integral (z1 z3^s + a z3 z4^s + Q)/z3^(s+1) of the displayed form, s = 3, a = 1, P = z2^3 + z3^3",
             [] {
               const std::vector<Scalar> c = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
               const RationalFamilyMember m = familyRational(3, 1, c);
               const Polynomial printed = z(1) * z(3).pow(3) + z(3) * z(4).pow(3) + familyQ(3, c);
               const FirstIntegralReport r = isFirstIntegral(m.form, RationalPair(printed, z(3).pow(4)));
               if (r.holds) return verified();
               return erratum("form ^ (g df - f dg) = " + printCanonical(r.witness) +
                              "; the displayed form has first integral (" + printCanonical(m.integral.numerator()) +
                              ") / z3^4");
             });
  ledger.add("ex4.4-s2-cubic-form", "the s = 2 member is -(3 f dz3 - z3 df) for its own numerator f", [] {
    const std::vector<Scalar> c = {Scalar(0), Scalar(0), Scalar(1)};
    const RationalFamilyMember m = familyRational(2, 1, c);
    const auto ratio = projectiveEqual(cubicForm(m.integral.numerator()), m.form);
    return ratio ? verified("ratio " + toString(*ratio)) : refuted(printCanonical(m.form));
  });

  struct LogParams {
    int s1, s2, s3;
    Scalar a;
    std::vector<Scalar> lambdas;
  };
  std::vector<LogParams> params;
  for (int n = 0; n < 3; ++n) {
    LogParams p{sampler.uniform(1, 2), sampler.uniform(1, 2), sampler.uniform(1, 2), Scalar(sampler.uniform(1, 3)), {}};
    const int k = sampler.uniform(1, 2);
    const int total = k * (p.s1 + p.s2 + p.s3);
    const int l2 = sampler.uniform(1, total - 1);
    p.lambdas = {Scalar(-k), Scalar(l2), Scalar(total - l2)};
    params.push_back(p);
  }
  auto describe = [](const LogParams& p) {
    return "(s1,s2,s3) = (" + std::to_string(p.s1) + "," + std::to_string(p.s2) + "," + std::to_string(p.s3) +
           "), a = " + toString(p.a) + ", lambda = (" + toString(p.lambdas[0]) + "," + toString(p.lambdas[1]) + "," +
           toString(p.lambdas[2]) + ")";
  };
  for (std::size_t n = 0; n < params.size(); ++n) {
    const LogParams p = params[n];
    ledger.add("ex4.5-set" + std::to_string(n + 1),
               "logarithmic family, " + describe(p) + ": integrable of degree s1+s2+s3, Sing = V(z2, z3), first integral f^-l1 / (z2^l2 z3^l3)",
               [&ledger, p, line] {
                 const LogFamilyMember m = familyLogarithmic(p.s1, p.s2, p.s3, p.a, p.lambdas);
                 Outcome o = projectiveAndIntegrable(m.form, p.s1 + p.s2 + p.s3);
                 if (o.status != ClaimStatus::kVerified) return o;
                 o = ledger.singEquals(m.form, line);
                 if (o.status != ClaimStatus::kVerified) return o;
                 const auto k = static_cast<unsigned>(Scalar(-p.lambdas[0]).get_num().get_ui());
                 const Polynomial den = z(2).pow(static_cast<unsigned>(p.lambdas[1].get_num().get_ui())) *
                                        z(3).pow(static_cast<unsigned>(p.lambdas[2].get_num().get_ui()));
                 o = firstIntegral(m.form, m.fa.pow(k), den);
                 if (o.status != ClaimStatus::kVerified) return o;
                 return verified("first integral degree " + std::to_string(den.totalDegree()));
               });
  }
  {
    const LogParams p = params.front();
    ledger.add("ex4.5-a0-pullback", "logarithmic family at a = 0, " + describe(p) + ": no dz4 term", [p] {
      const LogFamilyMember m = familyLogarithmic(p.s1, p.s2, p.s3, 0, p.lambdas);
      return m.form[3].isZero() ? verified() : refuted("dz4 coefficient " + printCanonical(m.form[3]));
    });
    ledger.add("ex4.5-degree", "printed degree lambda1 + lambda2 of the minimal first integral, " + describe(p), [p] {
      const Scalar computed = -p.lambdas[0] * (p.s1 + p.s2 + p.s3);
      const Scalar printed = p.lambdas[0] + p.lambdas[1];
      if (computed == printed) return verified(toString(computed));
      return erratum("computed degree " + toString(computed) + " = lambda2 + lambda3, printed lambda1 + lambda2 = " +
                     toString(printed));
    });
  }
}

}  // namespace

const std::vector<std::string>& knownErrata() {
  static const std::vector<std::string> ids = {
      "nu1-euler",       "nu3-euler",           "nu3-euler-sing",         "nu4-euler",           "sec3-l112-sing",
      "sec3-shape2-generic", "sec3-shape3-generic", "ex4.4-printed-integral", "ex4.5-degree",
  };
  return ids;
}

std::vector<ClaimRecord> verifyPaperReport(const ReportOptions& options) {
  Ledger ledger(options);
  Sampler sampler(options.seed);
  sectionOne(ledger);
  theoremTwoOne(ledger);
  sectionTwoTables(ledger);
  sectionThree(ledger, sampler);
  sectionFour(ledger, sampler);
  return ledger.take();
}

}  // namespace folcheck
