#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folcheck {

// Exact rational coefficients. GMP keeps mpq values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "n" or "n/d" with an optional leading sign; throws
// std::invalid_argument on malformed text or a zero denominator.
Scalar parseScalar(std::string_view text);

std::string toString(const Scalar& value);

inline bool isInteger(const Scalar& value) { return value.get_den() == 1; }

}  // namespace folcheck
