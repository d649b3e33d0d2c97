#include "folcheck/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace folcheck {

namespace {

bool isDigitString(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parseScalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!isDigitString(num) || !isDigitString(den)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar value(Integer(std::string(num), 10), d);
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

std::string toString(const Scalar& value) { return value.get_str(); }

}  // namespace folcheck
