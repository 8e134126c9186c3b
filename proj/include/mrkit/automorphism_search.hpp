#pragma once

#include <optional>
#include <vector>

#include "mrkit/cubic_algebra.hpp"
#include "mrkit/implication_algebra.hpp"

namespace mrkit {

/// A finite carrier with binary operation tables (kUndefined marks partial
/// entries) and a per-element invariant used to prune candidate images.
struct OpStructure {
  std::size_t size = 0;
  std::vector<std::vector<Elem>> ops;  ///< each size*size, row-major
  std::vector<std::pair<int, int>> signature;
  std::vector<Elem> branch_order;      ///< elements in branching order
};

/// Join and Delta tables; signature (|down|, |up|); minimal elements first.
OpStructure cubic_structure(const CubicAlgebra& algebra);
/// Implication and join tables; signature (|down|, |up|).
OpStructure implication_structure(const ImplicationAlgebra& algebra);

/// Every isomorphism source -> target preserving all tables (undefined
/// entries must map to undefined entries), ascending by image array.
std::vector<Permutation> enumerate_isomorphisms(const OpStructure& source, const OpStructure& target,
                                                std::size_t limit = 0);

/// Aut(A) in ascending order; throws CapExceeded above `max_carrier`.
std::vector<Permutation> enumerate_aut(const CubicAlgebra& algebra, std::size_t max_carrier = kDefaultMaxCarrier);
std::vector<Permutation> enumerate_aut(const ImplicationAlgebra& algebra,
                                       std::size_t max_carrier = kDefaultMaxCarrier);

std::optional<Permutation> find_isomorphism(const CubicAlgebra& source, const CubicAlgebra& target);
std::optional<Permutation> find_isomorphism(const ImplicationAlgebra& source, const ImplicationAlgebra& target);

Permutation identity_permutation(std::size_t n);
/// (f o g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
bool is_automorphism(const CubicAlgebra& algebra, const Permutation& f);

}  // namespace mrkit
