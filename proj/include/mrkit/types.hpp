#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mrkit {

/// Index of an element inside the carrier of one algebra.
using Elem = std::int32_t;

/// Table entry for an undefined partial operation.
inline constexpr Elem kUndefined = -1;

/// Subset of a carrier, one bit per element index.
using ElementSet = boost::dynamic_bitset<>;

/// A map on a carrier given by its image array; automorphisms are permutations.
using Permutation = std::vector<Elem>;

inline constexpr std::size_t kDefaultMaxCarrier = 81;

/// Carrier cap honouring the MRKIT_MAX_CARRIER environment override.
std::size_t max_carrier_from_env(std::size_t fallback = kDefaultMaxCarrier);

std::vector<Elem> to_vector(const ElementSet& set);
ElementSet make_set(std::size_t n, const std::vector<Elem>& members);

}  // namespace mrkit
