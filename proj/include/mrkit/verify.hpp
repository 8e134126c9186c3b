#pragma once

#include <string>
#include <vector>

#include "mrkit/claims.hpp"
#include "mrkit/serialization.hpp"

namespace mrkit {

enum class ClaimStatus { Pass, Fail, Skip };

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string claim_id;
  std::string instance;
  ClaimStatus status = ClaimStatus::Skip;
  std::string witness;  ///< failure description, or the unmet precondition
};

/// The claims named by `ids` (all when empty), in registry order. Throws
/// Usage for an unknown id.
std::vector<const Claim*> select_claims(const std::vector<std::string>& ids);

/// Every selected claim on every instance, instance-major. A library error
/// raised by a check is reported as a failure.
std::vector<ClaimResult> run_claims(const std::vector<Instance>& instances, const std::vector<const Claim*>& claims);

bool all_passed(const std::vector<ClaimResult>& results);

/// [{"claim_id", "instance", "status", "witness"?}, ...]
Json to_json(const std::vector<ClaimResult>& results);
/// One line per result plus a summary line.
std::string to_text(const std::vector<ClaimResult>& results);

}  // namespace mrkit
