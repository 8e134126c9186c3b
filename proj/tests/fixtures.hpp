#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mrkit/boolean_algebra.hpp"
#include "mrkit/constructions.hpp"

namespace fixtures {

using namespace mrkit;

/// I(B_n), atoms p, q, r.
inline const PairAlgebra& cube(unsigned n) {
  static std::vector<std::unique_ptr<PairAlgebra>> cache(5);
  auto& slot = cache.at(n);
  if (!slot) slot = std::make_unique<PairAlgebra>(build_I(as_implication_algebra(BooleanAlgebra(n)).algebra));
  return *slot;
}

/// {p, q, 1} inside B2.
inline const ImplicationSubalgebra& i3() {
  static const ImplicationSubalgebra s = implication_subalgebra(BooleanAlgebra(2), {0b01, 0b10, 0b11});
  return s;
}

/// I(I3): five elements, not MR.
inline const PairAlgebra& n5() {
  static const PairAlgebra pa = build_I(i3().algebra);
  return pa;
}

inline const CubicAlgebra& c1() { return cube(1).algebra; }
inline const CubicAlgebra& c2() { return cube(2).algebra; }
inline const CubicAlgebra& c3() { return cube(3).algebra; }

/// The one-element algebra.
inline const PairAlgebra& point() { return cube(0); }

}  // namespace fixtures
