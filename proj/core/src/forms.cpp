#include "folcheck/forms.hpp"

#include <string>
#include <utility>

namespace folcheck {

namespace {

void requireAmbient(int a, int b) {
  if (a != b) throw AmbientMismatch(a, b);
}

std::vector<Polynomial> zeros(int ambient, std::size_t count) {
  return std::vector<Polynomial>(count, Polynomial(ambient));
}

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

// --- OneForm ---------------------------------------------------------------

OneForm::OneForm(int ambient) : ambient_(ambient), coeffs_(zeros(ambient, static_cast<std::size_t>(ambient))) {}

OneForm::OneForm(std::vector<Polynomial> coefficients)
    : ambient_(static_cast<int>(coefficients.size())), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("a 1-form needs at least one coefficient");
  for (const auto& c : coeffs_) requireAmbient(ambient_, c.ambient());
}

OneForm OneForm::basis(int ambient, int index) {
  OneForm form(ambient);
  form[index] = Polynomial::constant(ambient, 1);
  return form;
}

bool OneForm::isZero() const {
  for (const auto& c : coeffs_) {
    if (!c.isZero()) return false;
  }
  return true;
}

OneForm OneForm::operator-() const {
  OneForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

OneForm& OneForm::operator+=(const OneForm& other) {
  requireAmbient(ambient_, other.ambient_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& other) {
  requireAmbient(ambient_, other.ambient_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

OneForm& OneForm::operator*=(const Scalar& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

OneForm& OneForm::operator*=(const Polynomial& f) {
  requireAmbient(ambient_, f.ambient());
  for (auto& p : coeffs_) p *= f;
  return *this;
}

// --- TwoForm ---------------------------------------------------------------

TwoForm::TwoForm(int ambient) : ambient_(ambient), coeffs_(zeros(ambient, choose(ambient, 2))) {}

std::size_t TwoForm::slot(int i, int j) const {
  if (i < 0 || j >= ambient_ || i >= j) throw std::out_of_range("2-form index pair must satisfy i < j");
  std::size_t s = 0;
  for (int a = 0; a < i; ++a) s += static_cast<std::size_t>(ambient_ - 1 - a);
  return s + static_cast<std::size_t>(j - i - 1);
}

Polynomial TwoForm::get(int i, int j) const {
  if (i == j) return Polynomial(ambient_);
  if (i < j) return coeffs_[slot(i, j)];
  return -coeffs_[slot(j, i)];
}

Polynomial& TwoForm::at(int i, int j) { return coeffs_[slot(i, j)]; }

bool TwoForm::isZero() const {
  for (const auto& c : coeffs_) {
    if (!c.isZero()) return false;
  }
  return true;
}

TwoForm& TwoForm::operator+=(const TwoForm& other) {
  requireAmbient(ambient_, other.ambient_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TwoForm& TwoForm::operator*=(const Polynomial& f) {
  for (auto& c : coeffs_) c *= f;
  return *this;
}

// --- ThreeForm -------------------------------------------------------------

ThreeForm::ThreeForm(int ambient) : ambient_(ambient), coeffs_(zeros(ambient, choose(ambient, 3))) {}

std::size_t ThreeForm::slot(int i, int j, int k) const {
  if (i < 0 || k >= ambient_ || i >= j || j >= k) throw std::out_of_range("3-form indices must satisfy i < j < k");
  std::size_t s = 0;
  for (int a = 0; a < ambient_; ++a) {
    for (int b = a + 1; b < ambient_; ++b) {
      for (int c = b + 1; c < ambient_; ++c) {
        if (a == i && b == j && c == k) return s;
        ++s;
      }
    }
  }
  return s;
}

const Polynomial& ThreeForm::get(int i, int j, int k) const { return coeffs_[slot(i, j, k)]; }
Polynomial& ThreeForm::at(int i, int j, int k) { return coeffs_[slot(i, j, k)]; }

std::vector<std::array<int, 3>> ThreeForm::indexTriples() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < ambient_; ++a) {
    for (int b = a + 1; b < ambient_; ++b) {
      for (int c = b + 1; c < ambient_; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

bool ThreeForm::isZero() const {
  for (const auto& c : coeffs_) {
    if (!c.isZero()) return false;
  }
  return true;
}

// --- calculus --------------------------------------------------------------

OneForm differential(const Polynomial& f) {
  OneForm df(f.ambient());
  for (int i = 0; i < f.ambient(); ++i) df[i] = partialDerivative(f, i);
  return df;
}

TwoForm exteriorDerivative(const OneForm& form) {
  const int n = form.ambient();
  TwoForm out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.at(i, j) = partialDerivative(form[j], i) - partialDerivative(form[i], j);
  }
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  requireAmbient(a.ambient(), b.ambient());
  const int n = a.ambient();
  TwoForm out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.at(i, j) = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

ThreeForm wedge(const OneForm& a, const TwoForm& b) {
  requireAmbient(a.ambient(), b.ambient());
  const int n = a.ambient();
  ThreeForm out(n);
  for (const auto& [i, j, k] : out.indexTriples()) {
    out.at(i, j, k) = a[i] * b.get(j, k) - a[j] * b.get(i, k) + a[k] * b.get(i, j);
  }
  return out;
}

Polynomial radialContraction(const OneForm& form) {
  const int n = form.ambient();
  Polynomial sum(n);
  for (int i = 0; i < n; ++i) sum += Polynomial::variable(n, i) * form[i];
  return sum;
}

OneForm radialContraction(const TwoForm& form) {
  const int n = form.ambient();
  OneForm out(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i != k) out[k] += Polynomial::variable(n, i) * form.get(i, k);
    }
  }
  return out;
}

ProjectivityReport checkProjective(const OneForm& form) {
  ProjectivityReport report;
  report.contraction = radialContraction(form);
  report.radialZero = report.contraction.isZero();
  bool sawCoefficient = false;
  bool uniform = true;
  for (int i = 0; i < form.ambient() && uniform; ++i) {
    const Homogeneity h = homogeneousDegree(form[i]);
    if (h.kind == Homogeneity::kZero) continue;
    if (h.kind == Homogeneity::kMixed || (report.commonDegree && *report.commonDegree != h.degree)) {
      uniform = false;
      report.offendingSlot = i;
      break;
    }
    report.commonDegree = h.degree;
    sawCoefficient = true;
  }
  report.homogeneous = uniform && sawCoefficient;
  if (!report.homogeneous) report.commonDegree.reset();
  if (report.homogeneous && report.radialZero) report.foliationDegree = *report.commonDegree - 1;
  return report;
}

IntegrabilityReport isIntegrable(const OneForm& form) {
  IntegrabilityReport report{false, wedge(form, exteriorDerivative(form))};
  report.integrable = report.witness.isZero();
  return report;
}

OneForm pullbackLinear(const OneForm& form, const Matrix& m) {
  if (m.rows() != form.ambient() || m.cols() != form.ambient()) {
    throw std::invalid_argument("pullback needs a square matrix matching the form's ambient");
  }
  return pullbackFromP2(form, m);
}

OneForm pullbackFromP2(const OneForm& planeForm, const Matrix& projection) {
  if (projection.rows() != planeForm.ambient()) {
    throw std::invalid_argument("projection has " + std::to_string(projection.rows()) + " rows, form has " +
                                std::to_string(planeForm.ambient()) + " variables");
  }
  if (projection.rank() != projection.rows()) throw std::invalid_argument("linear map is not surjective");
  const int target = projection.cols();
  std::vector<Polynomial> substituted;
  substituted.reserve(static_cast<std::size_t>(planeForm.ambient()));
  for (const auto& c : planeForm.coefficients()) substituted.push_back(substituteLinearForms(c, projection));
  OneForm out(target);
  for (int j = 0; j < target; ++j) {
    for (int i = 0; i < planeForm.ambient(); ++i) {
      if (projection(i, j) != 0) out[j] += substituted[static_cast<std::size_t>(i)] * projection(i, j);
    }
  }
  return out;
}

NonDivisibleError::NonDivisibleError(int slot, Polynomial remainder)
    : std::runtime_error("factor does not divide the dz" + std::to_string(slot + 1) + " coefficient"),
      slot_(slot),
      remainder_(std::move(remainder)) {}

OneForm dividePolynomialFactor(const OneForm& form, const Polynomial& factor) {
  requireAmbient(form.ambient(), factor.ambient());
  OneForm out(form.ambient());
  for (int i = 0; i < form.ambient(); ++i) {
    DivisionResult r = divide(form[i], factor);
    if (!r.remainder.isZero()) throw NonDivisibleError(i, std::move(r.remainder));
    out[i] = std::move(r.quotient);
  }
  return out;
}

Ideal singularIdeal(const OneForm& form) { return Ideal(form.ambient(), form.coefficients()); }

std::optional<Scalar> projectiveEqual(const OneForm& a, const OneForm& b) {
  if (a.isZero() || b.isZero()) throw std::invalid_argument("projective comparison of a zero form");
  if (a.ambient() != b.ambient()) return std::nullopt;
  int slot = 0;
  while (a[slot].isZero()) ++slot;
  const auto& [mono, coeff] = a[slot].terms().back();
  const Scalar other = b[slot].coefficient(mono);
  if (other == 0) return std::nullopt;
  const Scalar ratio = other / coeff;
  if (ratio * a != b) return std::nullopt;
  return ratio;
}

bool sameFoliation(const OneForm& a, const OneForm& b) {
  if (a.isZero() || b.isZero()) return false;
  return wedge(a, b).isZero();
}

}  // namespace folcheck
