#pragma once

#include <vector>

#include "mrkit/axioms.hpp"
#include "mrkit/types.hpp"

namespace mrkit {

class CubicAlgebra;

/// Localization of a cubic algebra at a point a: the members
/// { Delta(y, x) : a <= x <= y }, with coordinate maps
/// k(y) = (Delta(1, y) v a) -> a and l(y) = y v a.
struct Localization {
  Elem point = 0;
  ElementSet members;
  std::vector<Elem> k_map;  ///< kUndefined off the members
  std::vector<Elem> l_map;  ///< kUndefined off the members

  Elem k(Elem y) const;
  Elem l(Elem y) const;
};

/// Members of the localization as {Delta(y,x) : a <= x <= y}.
ElementSet localization_by_reflection(const CubicAlgebra& algebra, Elem a);
/// Members of the localization as {x : a <~ x}.
ElementSet localization_by_preceq(const CubicAlgebra& algebra, Elem a);

/// Builds the localization at `a`. With `verify`, every structural check of
/// verify_localization must pass or an Internal error is thrown.
Localization localize(const CubicAlgebra& algebra, Elem a, bool verify = true);

/// Checks the coordinate-map properties of a localization.
///
/// Violation ids: kl-a-mr (induced algebra fails MR), kl-a-atomic (a member
/// above no minimal member), kl-b (k <= l and both >= a), kl-c (pair
/// injectivity, also through the v a / v Delta(1,a) form), kl-d (every
/// p >= q >= a hit exactly once), kl-e (both member definitions agree).
AxiomReport verify_localization(const CubicAlgebra& algebra, const Localization& loc);

/// The unique member z with l(z) = p and k(z) = q. Throws NoSuchPair unless
/// p >= q >= a.
Elem from_pair(const CubicAlgebra& algebra, const Localization& loc, Elem p, Elem q);

}  // namespace mrkit
