#pragma once

#include <vector>

#include "mrkit/cubic_algebra.hpp"

namespace mrkit {

/// A subset of a cubic algebra closed under join and Delta, re-indexed as an
/// algebra of its own. Meets are recomputed inside the subset.
struct Subalgebra {
  CubicAlgebra algebra;
  std::vector<Elem> to_parent;    ///< sub index -> parent index
  std::vector<Elem> from_parent;  ///< parent index -> sub index or kUndefined
};

/// True iff the set contains 1 and is closed under join and Delta.
bool is_subalgebra(const CubicAlgebra& algebra, const ElementSet& set);
bool is_upward_closed(const CubicAlgebra& algebra, const ElementSet& set);

/// Induced algebra on a closed subset (members keep ascending parent order).
/// Throws NotClosed with a witness when the subset is not a subalgebra.
Subalgebra induced_subalgebra(const CubicAlgebra& algebra, const ElementSet& set,
                              Validation mode = Validation::Strict);

/// Every upward-closed subalgebra, in ascending bitset order.
std::vector<ElementSet> enumerate_upward_closed_subalgebras(const CubicAlgebra& algebra);

/// Smallest upward-closed subalgebra containing the seed set.
ElementSet upward_closed_subalgebra_closure(const CubicAlgebra& algebra, const ElementSet& seed);

}  // namespace mrkit
