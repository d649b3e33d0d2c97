#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folcheck/claim.hpp"
#include "folcheck/ideal.hpp"

namespace folcheck {

struct ReportOptions {
  GroebnerBudget budget;
  // Drives the random linear forms, family coefficients and residues.
  std::uint64_t seed = 1;
};

// Replays the full claim ledger in a fixed order. Failures never throw; they
// become refuted or inconclusive records.
std::vector<ClaimRecord> verifyPaperReport(const ReportOptions& options = {});

// Ledger ids whose printed source is known to fail its check. A run where
// exactly these come back as errata is the expected outcome.
const std::vector<std::string>& knownErrata();

}  // namespace folcheck
