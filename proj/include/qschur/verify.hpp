#pragma once

#include <string>
#include <vector>

#include "qschur/partition.hpp"

namespace qschur {

/// Result of running one identity over a parameter range. Every failing
/// instance carries a replayable parameter string.
struct VerificationReport {
  std::string identity;
  std::string range;
  long instances = 0;
  std::vector<std::string> failures;
  long wall_ms = 0;
  bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
  // Explicit partition, or empty to sweep all weights up to max_weight.
  Partition mu;
  bool has_mu = false;
  int max_weight = 6;
  int n = 2;  // box size for the pushforward identity
  int jobs = 1;
};

// identity ids: eq12, eq16, eq20, eq24, eq30, lemma3, nonneg
VerificationReport run_verification(const std::string& identity,
                                    const VerifyOptions& opt);

}  // namespace qschur
