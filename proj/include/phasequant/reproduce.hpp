#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phasequant::reproduce {

struct ClaimResult {
  int id = 0;
  std::string slug;
  bool pass = false;
  std::string details;
  std::vector<std::pair<std::string, double>> values;
};

struct ClaimInfo {
  int id;
  const char* slug;
  const char* summary;
};

// The headline numerical checks, in a fixed order. Each runs standalone and
// reports the quantities it measured alongside the pass/fail verdict.
const std::vector<ClaimInfo>& claim_registry();

ClaimResult run_claim(int id);

}  // namespace phasequant::reproduce
