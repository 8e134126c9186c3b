#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrkit/corpus.hpp"

namespace mrkit {

/// A failure description with its witness, or nothing when the check passed.
using Witness = std::optional<std::string>;

/// One checkable statement about a finite cubic algebra.
struct Claim {
  std::string id;
  std::string statement;
  bool needs_mr = false;     ///< skipped on algebras failing the MR axiom
  bool needs_pairs = false;  ///< skipped unless built as I(base)
  std::function<Witness(const Instance&)> check;
};

/// All claims, in a fixed order.
const std::vector<Claim>& claim_registry();
/// nullptr when the id is unknown.
const Claim* find_claim(std::string_view id);

}  // namespace mrkit
