#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace folcheck {

// Upper bound on the number of variables a monomial can carry: z1..z6 plus
// auxiliary variables used by the ideal engine.
inline constexpr int kMaxVars = 8;

using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index, Exponent power = 1);

  Exponent operator[](int index) const { return exps_[static_cast<std::size_t>(index)]; }
  void set(int index, Exponent value);

  int degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  // Index of the highest variable with a nonzero exponent, or -1 for 1.
  int lastVariable() const;

  bool divides(const Monomial& other) const;
  bool coprimeWith(const Monomial& other) const;

  // Throws std::overflow_error when an exponent leaves the Exponent range.
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other); the quotient other / *this is returned by
  // `other.quotient(*this)`.
  Monomial quotient(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  int degree_ = 0;
};

enum class MonomialOrder { kGrevlex, kLex };

// Three-way comparisons (-1, 0, 1) with z1 > z2 > ... . Variables past the
// ambient count carry exponent 0, so trailing auxiliary variables sort last.
int compareGrevlex(const Monomial& a, const Monomial& b);
int compareLex(const Monomial& a, const Monomial& b);
int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

}  // namespace folcheck

template <>
struct std::hash<folcheck::Monomial> {
  std::size_t operator()(const folcheck::Monomial& m) const noexcept { return m.hash(); }
};
