#include "folcheck/integrals.hpp"

#include <string>
#include <utility>

namespace folcheck {

namespace {

int requireHomogeneous(const Polynomial& p, const char* what) {
  const Homogeneity h = homogeneousDegree(p);
  if (!h.homogeneous()) throw std::invalid_argument(std::string(what) + " must be a nonzero homogeneous polynomial");
  return h.degree;
}

Polynomial productExcept(const std::vector<Polynomial>& factors, std::size_t skip) {
  Polynomial out = Polynomial::constant(factors.front().ambient(), 1);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j != skip) out *= factors[j];
  }
  return out;
}

}  // namespace

RationalPair::RationalPair(Polynomial numerator, Polynomial denominator)
    : f_(std::move(numerator)), g_(std::move(denominator)) {
  if (f_.ambient() != g_.ambient()) throw AmbientMismatch(f_.ambient(), g_.ambient());
  const int df = requireHomogeneous(f_, "numerator");
  const int dg = requireHomogeneous(g_, "denominator");
  if (df != dg) {
    throw std::invalid_argument("numerator degree " + std::to_string(df) + " differs from denominator degree " +
                                std::to_string(dg));
  }
  degree_ = df;
}

FirstIntegralReport isFirstIntegral(const OneForm& form, const RationalPair& integral) {
  if (form.isZero()) throw std::invalid_argument("first integral test on the zero form");
  const OneForm eta = integral.denominator() * differential(integral.numerator()) -
                      integral.numerator() * differential(integral.denominator());
  FirstIntegralReport report{false, wedge(form, eta)};
  report.holds = report.witness.isZero();
  return report;
}

RationalFoliation foliationFromRational(const RationalPair& integral) {
  OneForm eta = integral.denominator() * differential(integral.numerator()) -
                integral.numerator() * differential(integral.denominator());
  if (eta.isZero()) throw std::invalid_argument("f/g is constant; it defines no foliation");

  std::optional<Monomial> common;
  std::vector<Polynomial::Term> allTerms;
  for (const auto& c : eta.coefficients()) {
    if (c.isZero()) continue;
    const Monomial m = monomialContent(c);
    common = common ? Monomial::gcd(*common, m) : m;
    allTerms.insert(allTerms.end(), c.terms().begin(), c.terms().end());
  }
  RationalFoliation out{OneForm(eta.ambient()), *common, 1, false};
  // Content of the whole form: gcd of numerators over lcm of denominators.
  {
    Integer num = 0;
    Integer den = 1;
    for (const auto& [m, c] : allTerms) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    out.removedContent = Scalar(num, den);
    out.removedContent.canonicalize();
  }
  const Scalar inverse = 1 / out.removedContent;
  for (int i = 0; i < eta.ambient(); ++i) out.form[i] = divideByMonomial(eta[i], *common) * inverse;

  const Polynomial* smallest = nullptr;
  for (const auto& c : out.form.coefficients()) {
    if (!c.isZero() && (smallest == nullptr || c.totalDegree() < smallest->totalDegree())) smallest = &c;
  }
  if (smallest != nullptr && !smallest->isConstant()) {
    bool dividesAll = true;
    for (const auto& c : out.form.coefficients()) {
      if (&c != smallest && !c.isZero() && !divideExact(c, *smallest)) {
        dividesAll = false;
        break;
      }
    }
    out.nonReduced = dividesAll;
  }
  return out;
}

LogData::LogData(std::vector<Polynomial> factors, std::vector<Scalar> lambdas)
    : factors_(std::move(factors)), lambdas_(std::move(lambdas)) {
  if (factors_.empty()) throw LogDataError("logarithmic data needs at least one factor");
  if (factors_.size() != lambdas_.size()) {
    throw LogDataError(std::to_string(factors_.size()) + " factors but " + std::to_string(lambdas_.size()) +
                       " residues");
  }
  Scalar weighted = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].ambient() != factors_.front().ambient()) {
      throw AmbientMismatch(factors_.front().ambient(), factors_[i].ambient());
    }
    const Homogeneity h = homogeneousDegree(factors_[i]);
    if (!h.homogeneous()) throw LogDataError("factor " + std::to_string(i + 1) + " is not homogeneous");
    if (lambdas_[i] == 0) throw LogDataError("residue " + std::to_string(i + 1) + " is zero");
    weighted += lambdas_[i] * h.degree;
    for (std::size_t j = 0; j < i; ++j) {
      if (proportionality(factors_[j], factors_[i])) {
        throw LogDataError("factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                           " are proportional");
      }
    }
  }
  if (weighted != 0) {
    throw LogDataError("weighted degree sum of the residues is " + toString(weighted) + ", expected 0");
  }
}

OneForm buildLogForm(const LogData& data) {
  const auto& factors = data.factors();
  OneForm out(data.ambient());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out += (productExcept(factors, i) * data.lambdas()[i]) * differential(factors[i]);
  }
  return out;
}

OneForm buildBoundaryLogForm(const BoundaryLogData& data) {
  const int shape = data.shape;
  if (shape < 1 || shape > 3) throw LogDataError("boundary shape must be 1, 2 or 3");
  const std::size_t count = static_cast<std::size_t>(4 - shape);
  if (data.lines.size() != count || data.lambdas.size() != count) {
    throw LogDataError("shape " + std::to_string(shape) + " takes " + std::to_string(count) +
                       " linear forms and residues");
  }
  const int n = data.alpha.ambient();
  for (const auto& line : data.lines) {
    if (line.ambient() != n) throw AmbientMismatch(n, line.ambient());
    if (requireHomogeneous(line, "linear form") != 1) throw LogDataError("boundary factors must be linear");
  }
  if (requireHomogeneous(data.alpha, "alpha") != shape) {
    throw LogDataError("alpha must have degree " + std::to_string(shape) + " for shape " + std::to_string(shape));
  }
  Scalar residueSum = 0;
  for (const auto& l : data.lambdas) residueSum += l;

  const Polynomial& l1 = data.lines[0];
  const Polynomial& alpha = data.alpha;
  const OneForm dl1 = differential(l1);
  // L1 dalpha - shape * alpha dL1 is L1^(shape+1) d(alpha / L1^shape).
  const OneForm exactPart = l1 * differential(alpha) - (alpha * Scalar(shape)) * dl1;
  OneForm out(n);
  switch (shape) {
    case 1: {
      const Polynomial& l2 = data.lines[1];
      const Polynomial& l3 = data.lines[2];
      out += (l1 * l2 * l3 * data.lambdas[0]) * dl1;
      out += (l1 * l1 * l3 * data.lambdas[1]) * differential(l2);
      out += (l1 * l1 * l2 * data.lambdas[2]) * differential(l3);
      out += (l2 * l3) * exactPart;
      break;
    }
    case 2: {
      const Polynomial& l2 = data.lines[1];
      out += (l1 * l1 * l2 * data.lambdas[0]) * dl1;
      out += (l1.pow(3) * data.lambdas[1]) * differential(l2);
      out += l2 * exactPart;
      break;
    }
    default:
      out += (l1.pow(3) * data.lambdas[0]) * dl1;
      out += exactPart;
      break;
  }
  if (residueSum != 0) {
    throw LogDataError("radial contraction requires the residues to sum to 0, got " + toString(residueSum),
                       radialContraction(out));
  }
  return out;
}

LogDecompositionReport verifyLogDecomposition(const OneForm& form, const LogData& data) {
  LogDecompositionReport report{false, std::nullopt, buildLogForm(data)};
  if (form.isZero() || report.expanded.isZero()) return report;
  report.ratio = projectiveEqual(report.expanded, form);
  report.matches = report.ratio.has_value();
  return report;
}

}  // namespace folcheck
