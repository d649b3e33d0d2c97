#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folcheck/forms.hpp"

namespace folcheck {

// f / g with f, g homogeneous of the same degree, g nonzero.
class RationalPair {
 public:
  RationalPair(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return f_; }
  const Polynomial& denominator() const { return g_; }
  int degree() const { return degree_; }

 private:
  Polynomial f_;
  Polynomial g_;
  int degree_;
};

struct FirstIntegralReport {
  bool holds = false;
  TwoForm witness;  // form ^ (g df - f dg)
};

// f/g is constant on the leaves: form ^ (g df - f dg) == 0.
FirstIntegralReport isFirstIntegral(const OneForm& form, const RationalPair& integral);

struct RationalFoliation {
  OneForm form;
  Monomial removedMonomial;  // common monomial factor divided out
  Scalar removedContent;     // positive scalar content divided out
  // Set when a coefficient of the result divides all the others, exposing a
  // leftover common factor the monomial/content pass cannot remove.
  bool nonReduced = false;
};

// g df - f dg with the monomial common factor and the content removed.
// Throws std::invalid_argument when f/g is constant.
RationalFoliation foliationFromRational(const RationalPair& integral);

// Invalid logarithmic data. When the radial contraction fails, the nonzero
// contraction polynomial is attached as the witness.
class LogDataError : public std::invalid_argument {
 public:
  explicit LogDataError(const std::string& what, std::optional<Polynomial> witness = std::nullopt)
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  const std::optional<Polynomial>& witness() const { return witness_; }

 private:
  std::optional<Polynomial> witness_;
};

// Factors f_i with residues lambda_i; sum lambda_i deg f_i must vanish.
class LogData {
 public:
  LogData(std::vector<Polynomial> factors, std::vector<Scalar> lambdas);

  const std::vector<Polynomial>& factors() const { return factors_; }
  const std::vector<Scalar>& lambdas() const { return lambdas_; }
  int ambient() const { return factors_.front().ambient(); }

 private:
  std::vector<Polynomial> factors_;
  std::vector<Scalar> lambdas_;
};

// sum_i lambda_i (prod_j f_j / f_i) df_i
OneForm buildLogForm(const LogData& data);

// The three boundary shapes of the four-hyperplane logarithmic component:
//   shape 1: L1^2 L2 L3 (sum_{i<=3} l_i dL_i/L_i + d(alpha/L1)),   deg alpha = 1
//   shape 2: L1^3 L2 (l_1 dL1/L1 + l_2 dL2/L2 + d(alpha/L1^2)),    deg alpha = 2
//   shape 3: L1^4 (l_1 dL1/L1 + d(alpha/L1^3)),                    deg alpha = 3
// Shape k takes 4 - k linear forms and as many residues. The radial
// contraction equals (sum of residues) times the leading product, so the
// residues must sum to zero; violations raise LogDataError.
struct BoundaryLogData {
  int shape = 1;
  std::vector<Polynomial> lines;
  std::vector<Scalar> lambdas;
  Polynomial alpha;
};

OneForm buildBoundaryLogForm(const BoundaryLogData& data);

struct LogDecompositionReport {
  bool matches = false;
  std::optional<Scalar> ratio;  // form == ratio * buildLogForm(data)
  OneForm expanded;
};

LogDecompositionReport verifyLogDecomposition(const OneForm& form, const LogData& data);

}  // namespace folcheck
