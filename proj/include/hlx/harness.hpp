#pragma once

#include "hlx/generator.hpp"

namespace hlx {

struct ClaimResult {
  std::string name;
  size_t pass = 0, fail = 0, skipped = 0;
  std::vector<std::string> notes;
};

struct SuiteReport {
  uint64_t seed = 0;
  size_t count = 0;
  std::vector<ClaimResult> claims;
  std::vector<std::string> findings;  // one line per failing instance
  size_t twist_obstructions = 0;
  size_t hard_failures() const;
};

/// Generates `count` extensions from the seed and instance-checks every
/// constructive claim (stem reduction and its certificate, witness
/// consequences, pullback/product/common-quotient embeddings, the pair
/// isoclinism transfer, factor-set round trip, transport, the induced stem
/// isomorphism, kernel dimension matching, and the product decomposition).
/// Twist obstructions are recorded, never counted as failures.
SuiteReport verify_suite(uint64_t seed, size_t count);

}  // namespace hlx
