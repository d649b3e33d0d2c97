#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace folcheck {

enum class ClaimStatus { kVerified, kRefuted, kInconclusive, kErratum };

const char* toString(ClaimStatus status);

// One line of the verification ledger. The witness is already serialized
// (canonical polynomial/form text, a weight vector, a ratio, ...).
struct ClaimRecord {
  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::kInconclusive;
  std::optional<std::string> witness;
  std::chrono::microseconds elapsed{0};
};

}  // namespace folcheck
