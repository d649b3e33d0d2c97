#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folcheck/claim.hpp"
#include "folcheck/forms.hpp"
#include "folcheck/ideal.hpp"
#include "folcheck/polynomial.hpp"

namespace folcheck {

// Syntax or semantic error in textual input. Line and column are 1-based
// and point at the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, int line, int column, std::vector<std::string> expected = {});

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := primary ('^' nat)?
//   primary:= int ('/' nat)? | 'z' digit | 'dz' digit | '(' expr ')'
// Whitespace is ignored. Variables must lie within the ambient count.
Polynomial parsePolynomial(std::string_view text, int ambient = 4);
// Same grammar; every term must carry exactly one differential. Repeated
// differentials of the same variable are summed.
OneForm parseOneForm(std::string_view text, int ambient = 4);
// "ideal(g1, ..., gk)" or "union(I1, ..., Im)"; a union is encoded as the
// product of its members, which has the union as its zero set.
Ideal parseIdeal(std::string_view text, int ambient = 4);

std::string printCanonical(const Polynomial& p);
std::string printCanonical(const OneForm& form);
std::string printCanonical(const TwoForm& form);
std::string printCanonical(const ThreeForm& form);
std::string printCanonical(const Ideal& ideal);

enum class ReportFormat { kJson, kText };

// Fields in the order id, status, description, witness, elapsed_ms. Elapsed
// time is written only when includeTiming is set, so that repeated runs
// produce identical bytes.
std::string serializeReport(const std::vector<ClaimRecord>& records, ReportFormat format,
                            bool includeTiming = false);

}  // namespace folcheck
