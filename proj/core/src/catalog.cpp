#include "folcheck/catalog.hpp"

#include <algorithm>
#include <array>

#include "folcheck/textio.hpp"

namespace folcheck {

const char* toString(FormStatus status) {
  return status == FormStatus::kVerbatim ? "verbatim" : "derived-replacement";
}

UnknownFormKey::UnknownFormKey(const std::string& key) : std::invalid_argument("unknown form key '" + key + "'") {}

namespace {

// Transcriptions of the printed displays.
constexpr const char* kNu1Printed = "z3^3*dz1 - z1*z2^2*dz2 + (z2^3 - z1*z3^2)*dz2";
constexpr const char* kNu2 = "-z3^3*dz1 + z3*(z2^2 + z1*z3)*dz2 + (z1*z3^2 - z2^3 - z1*z2*z3)*dz3";
constexpr const char* kNu3 = "z2^2*z3*dz1 - z3*(z2^2 + z3^2)*dz2 + (z2^3 + z2^2*z3 - z1*z2*z3)*dz3";
constexpr const char* kNu4 =
    "(z1*z2*z3 + z3^3 - z2^3)*dz1 + z2*(z3^2 - z1*z2)*dz2 - (z2^2*z3 + z1^2*z2 + z1*z3^2)*dz3";
constexpr const char* kOmega =
    "(2*z2^2*z4 - z2*z3^2 - z1*z3*z4)*dz1 + (2*z3^2*z1 - 3*z1*z2*z4)*dz2 + (3*z1^2*z4 - z1*z2*z3)*dz3 + "
    "(z2^2*z1 - 2*z3*z1^2)*dz4";
constexpr const char* kOmega1 = "z1*(-z3*z4*dz1 + 3*z1*z4*dz3 - 2*z3*z1*dz4)";
constexpr const char* kOmega2 = "z2*(2*z2*z4*dz1 - 3*z1*z4*dz2 + z2*z1*dz4)";
constexpr const char* kOmega3 = "z3*(-z2*z3*dz1 + 2*z3*z1*dz2 - z1*z2*dz3)";

constexpr std::array<const char*, 3> kCubics = {
    "z1*z3^2 + z3*z4^2 + z2^3",
    "z1*z3^2 + z2*z3*z4 + z2^3",
    "z1*z3^2 + z2^3",
};

NamedForm verbatim(std::string key, const char* text, int ambient) {
  return {std::move(key), parseOneForm(text, ambient), FormStatus::kVerbatim, text};
}

NamedForm sumOf(std::string key, const char* a, const char* b) {
  return {std::move(key), parseOneForm(a) + parseOneForm(b), FormStatus::kVerbatim,
          std::string("(") + a + ") + (" + b + ")"};
}

Polynomial z(int ambient, int index) { return Polynomial::variable(ambient, index); }

}  // namespace

const std::vector<std::string>& namedFormKeys() {
  static const std::vector<std::string> keys = {
      "nu1",     "nu1-printed", "nu2",     "nu3",     "nu3-euler", "nu4",     "omega",
      "omega1",  "omega2",      "omega3",  "omega12", "omega13",   "omega23", "omegaF1",
      "omegaF2", "omegaF3",     "corollary41",
  };
  return keys;
}

Polynomial theoremCubic(int index) {
  if (index < 1 || index > 3) throw std::out_of_range("cubic index must be 1, 2 or 3");
  return parsePolynomial(kCubics[static_cast<std::size_t>(index - 1)]);
}

OneForm cubicForm(const Polynomial& f) {
  if (f.ambient() < 3) throw std::invalid_argument("3 f dz3 - z3 df needs at least 3 variables");
  const int n = f.ambient();
  OneForm out = -(z(n, 2) * differential(f));
  out[2] += f * Scalar(3);
  return out;
}

NamedForm namedForm(std::string_view key) {
  if (key == "nu1") {
    const RationalPair pair(parsePolynomial("z1*z3^2 + z2^3", 3), parsePolynomial("z3^3", 3));
    return {"nu1", foliationFromRational(pair).form, FormStatus::kDerivedReplacement,
            "foliation of the first integral (z1*z3^2 + z2^3)/z3^3, replacing the printed text (see nu1-printed)"};
  }
  if (key == "nu1-printed") return verbatim("nu1-printed", kNu1Printed, 3);
  if (key == "nu2") return verbatim("nu2", kNu2, 3);
  if (key == "nu3") return verbatim("nu3", kNu3, 3);
  if (key == "nu4") return verbatim("nu4", kNu4, 3);
  if (key == "nu3-euler") {
    const OneForm printed = parseOneForm(kNu3, 3);
    auto completed = completeFromEuler(0, printed[0], 1, printed[1], 2);
    return {"nu3-euler", *completed, FormStatus::kDerivedReplacement,
            "printed dz1 and dz2 coefficients of nu3, dz3 coefficient solved from sum z_i A_i = 0"};
  }
  if (key == "omega") return verbatim("omega", kOmega, 4);
  if (key == "omega1") return verbatim("omega1", kOmega1, 4);
  if (key == "omega2") return verbatim("omega2", kOmega2, 4);
  if (key == "omega3") return verbatim("omega3", kOmega3, 4);
  if (key == "omega12") return sumOf("omega12", kOmega1, kOmega2);
  if (key == "omega13") return sumOf("omega13", kOmega1, kOmega3);
  if (key == "omega23") return sumOf("omega23", kOmega2, kOmega3);
  for (int i = 1; i <= 3; ++i) {
    if (key == "omegaF" + std::to_string(i)) {
      return {std::string(key), cubicForm(theoremCubic(i)), FormStatus::kVerbatim,
              std::string("3*f*dz3 - z3*df with f = ") + kCubics[static_cast<std::size_t>(i - 1)]};
    }
  }
  if (key == "corollary41") {
    const Polynomial f = parsePolynomial("z1*z3^2 + z2*z3*z4 + z2^3");
    OneForm out = (f * Scalar(3)) * OneForm::basis(4, 2) - z(4, 2) * differential(f);
    return {"corollary41", out, FormStatus::kVerbatim,
            "3*(z1*z3^2 + z2*z3*z4 + z2^3)*dz3 - z3*d(z1*z3^2 + z2*z3*z4 + z2^3)"};
  }
  throw UnknownFormKey(std::string(key));
}

std::optional<OneForm> completeFromEuler(int i, const Polynomial& ai, int j, const Polynomial& aj, int k) {
  std::array<int, 3> slots = {i, j, k};
  std::sort(slots.begin(), slots.end());
  if (slots != std::array<int, 3>{0, 1, 2}) throw std::invalid_argument("slots must be a permutation of 1, 2, 3");
  if (ai.ambient() != 3 || aj.ambient() != 3) throw std::invalid_argument("Euler completion works on 3 variables");
  const Homogeneity hi = homogeneousDegree(ai);
  const Homogeneity hj = homogeneousDegree(aj);
  if (hi.kind == Homogeneity::kMixed || hj.kind == Homogeneity::kMixed ||
      (hi.homogeneous() && hj.homogeneous() && hi.degree != hj.degree)) {
    throw std::invalid_argument("known coefficients must be homogeneous of one degree");
  }
  const Polynomial known = z(3, i) * ai + z(3, j) * aj;
  auto ak = divideExact(-known, z(3, k));
  if (!ak) return std::nullopt;
  OneForm out(3);
  out[i] = ai;
  out[j] = aj;
  out[k] = *ak;
  return out;
}

Polynomial familyP(int s, const std::vector<Scalar>& coeffs) {
  if (s < 1) throw std::invalid_argument("family degree s must be at least 1");
  if (coeffs.size() != static_cast<std::size_t>(s + 1)) {
    throw std::invalid_argument("expected " + std::to_string(s + 1) + " coefficients a_0..a_s");
  }
  Polynomial p(4);
  for (int i = 0; i <= s; ++i) {
    Monomial m;
    m.set(1, static_cast<Exponent>(i));
    m.set(2, static_cast<Exponent>(s - i));
    p += Polynomial::monomial(4, m, coeffs[static_cast<std::size_t>(i)]);
  }
  return p;
}

Polynomial familyQ(int s, const std::vector<Scalar>& coeffs) {
  familyP(s, coeffs);
  Polynomial q(4);
  for (int i = 0; i <= s; ++i) {
    Monomial m;
    m.set(1, static_cast<Exponent>(i + 1));
    m.set(2, static_cast<Exponent>(s - i));
    q += Polynomial::monomial(4, m, coeffs[static_cast<std::size_t>(i)] / Scalar(i + 1));
  }
  return q;
}

RationalFamilyMember familyRational(int s, const Scalar& a, const std::vector<Scalar>& coeffs) {
  const Polynomial p = familyP(s, coeffs);
  if (coeffs.back() == 0) throw std::invalid_argument("the leading coefficient a_s must be nonzero");
  const Polynomial z1 = z(4, 0);
  const Polynomial z2 = z(4, 1);
  const Polynomial z3 = z(4, 2);
  const Polynomial z4 = z(4, 3);
  const auto us = static_cast<unsigned>(s);
  OneForm form(4);
  form[0] = z3.pow(us + 1);
  form[1] = -(z3 * p);
  form[2] = -(z1 * z3.pow(us)) + z2 * p + (z3 * z4.pow(us)) * (Scalar(s) * a);
  form[3] = -((z3 * z3 * z4.pow(us - 1)) * (Scalar(s) * a));
  const Polynomial numerator = z1 * z3.pow(us) - (z3 * z4.pow(us)) * a - familyQ(s, coeffs);
  return {form, RationalPair(numerator, z3.pow(us + 1))};
}

LogFamilyMember familyLogarithmic(int s1, int s2, int s3, const Scalar& a, const std::vector<Scalar>& lambdas) {
  if (s1 < 1 || s2 < 1 || s3 < 1) throw std::invalid_argument("s1, s2, s3 must be at least 1");
  if (lambdas.size() != 3) throw std::invalid_argument("the logarithmic family takes three residues");
  const Polynomial z1 = z(4, 0);
  const Polynomial z2 = z(4, 1);
  const Polynomial z3 = z(4, 2);
  const Polynomial z4 = z(4, 3);
  const auto total = static_cast<unsigned>(s1 + s2 + s3);
  const Polynomial inner = z1 * z2.pow(static_cast<unsigned>(s1 - 1)) + z4.pow(static_cast<unsigned>(s1)) * a;
  const Polynomial fa =
      z2.pow(static_cast<unsigned>(s2)) * z3.pow(static_cast<unsigned>(s3)) * inner + z2.pow(total) + z3.pow(total);
  LogData data({fa, z2, z3}, lambdas);
  return {buildLogForm(data), data, fa};
}

Integer dimensionFormula(int s) {
  if (s < 0) throw std::invalid_argument("degree s must be nonnegative");
  Integer a;
  Integer b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(s + 4), 3);
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s + 5), 3);
  return 4 * a - b - 1;
}

}  // namespace folcheck
