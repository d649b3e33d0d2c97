#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace folcheck::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;  // refuted, erratum, or a check that came back false
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

struct CommandInfo {
  std::string name;
  std::string summary;
  // Library operations the subcommand calls, for the coverage test.
  std::vector<std::string> operations;
};

const std::vector<CommandInfo>& commandTable();

// args excludes the program name. Never throws.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folcheck::cli
