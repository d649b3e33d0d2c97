#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folcheck/forms.hpp"
#include "folcheck/integrals.hpp"

namespace folcheck {

enum class FormStatus { kVerbatim, kDerivedReplacement };

const char* toString(FormStatus status);

struct NamedForm {
  std::string key;
  OneForm form;
  FormStatus status = FormStatus::kVerbatim;
  // ASCII transcription of the printed display for verbatim entries, or a
  // note on how a replacement was obtained.
  std::string source;

  int ambient() const { return form.ambient(); }
};

class UnknownFormKey : public std::invalid_argument {
 public:
  explicit UnknownFormKey(const std::string& key);
};

// nu1 (derived from its first integral), nu1-printed, nu2, nu3, nu3-euler,
// nu4, omega, omega1..omega3, omega12, omega13, omega23, omegaF1..omegaF3,
// corollary41. The nu forms live in 3 variables, the rest in 4.
NamedForm namedForm(std::string_view key);
const std::vector<std::string>& namedFormKeys();

// The cubics f of the three 3 f dz3 - z3 df forms, index 1..3.
Polynomial theoremCubic(int index);
// 3 f dz3 - z3 df
OneForm cubicForm(const Polynomial& f);

// Solve sum z_i A_i = 0 for the missing slot of a 3-variable form:
// A_k = -(z_i A_i + z_j A_j) / z_k when z_k divides exactly. Slots are
// 0-based and must be a permutation of {0, 1, 2}.
std::optional<OneForm> completeFromEuler(int i, const Polynomial& ai, int j, const Polynomial& aj, int k);

struct RationalFamilyMember {
  OneForm form;
  RationalPair integral;
};

// z3^(s+1) dz1 - z3 P dz2 + (-z1 z3^s + z2 P + s a z3 z4^s) dz3 - s a z3^2 z4^(s-1) dz4
// with P = sum_i c_i z2^i z3^(s-i). The returned integral is the pair the
// displayed form actually admits, (z1 z3^s - a z3 z4^s - Q) / z3^(s+1) with
// Q = sum_i c_i/(i+1) z2^(i+1) z3^(s-i).
RationalFamilyMember familyRational(int s, const Scalar& a, const std::vector<Scalar>& coeffs);

// Polynomials P and Q of the rational family.
Polynomial familyP(int s, const std::vector<Scalar>& coeffs);
Polynomial familyQ(int s, const std::vector<Scalar>& coeffs);

struct LogFamilyMember {
  OneForm form;
  LogData data;
  Polynomial fa;
};

// f_a = z2^s2 z3^s3 (z1 z2^(s1-1) + a z4^s1) + z2^S + z3^S with S = s1+s2+s3,
// and the logarithmic form over (f_a, z2, z3) with residues lambda.
// Throws LogDataError when lambda1 S + lambda2 + lambda3 != 0.
LogFamilyMember familyLogarithmic(int s1, int s2, int s3, const Scalar& a, const std::vector<Scalar>& lambdas);

// 4 C(s+4, 3) - C(s+5, 3) - 1
Integer dimensionFormula(int s);

}  // namespace folcheck
