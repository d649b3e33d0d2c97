#include "folcheck/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace folcheck {

Monomial Monomial::variable(int index, Exponent power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int index, Exponent value) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  auto& slot = exps_[static_cast<std::size_t>(index)];
  degree_ += static_cast<int>(value) - static_cast<int>(slot);
  slot = value;
}

int Monomial::lastVariable() const {
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (exps_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprimeWith(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned sum = static_cast<unsigned>(exps_[i]) + other.exps_[i];
    if (sum > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    out.exps_[i] = static_cast<Exponent>(sum);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::invalid_argument("monomial quotient is not exact");
    out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

int compareGrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int compareLex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  return order == MonomialOrder::kGrevlex ? compareGrevlex(a, b) : compareLex(a, b);
}

}  // namespace folcheck
