#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrkit/implication_algebra.hpp"

namespace mrkit {

/// Atom bitmask naming an element of a finite powerset algebra.
using Mask = std::uint32_t;

inline constexpr unsigned kMaxAtoms = 16;

/// Powerset algebra on n atoms; elements are atom bitmasks.
class BooleanAlgebra {
 public:
  /// Throws CapExceeded when atoms exceeds `cap` (at most kMaxAtoms).
  explicit BooleanAlgebra(unsigned atoms, unsigned cap = kMaxAtoms);

  unsigned atoms() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_; }
  Mask top() const { return static_cast<Mask>(size() - 1); }
  Mask bottom() const { return 0; }

  Mask join(Mask x, Mask y) const { return x | y; }
  Mask meet(Mask x, Mask y) const { return x & y; }
  Mask complement(Mask x) const { return ~x & top(); }
  Mask implies(Mask x, Mask y) const { return complement(x) | y; }
  bool leq(Mask x, Mask y) const { return (x & ~y) == 0; }

  /// Atom names p, q, r, s, ... ; "0" and "1" for the bounds, otherwise the
  /// concatenated atom names (e.g. "pq" in B3).
  std::string label(Mask x) const;
  Mask parse(const std::string& label) const;
  std::vector<Mask> elements() const;

 private:
  unsigned atoms_;
};

/// An implication subalgebra of a Boolean algebra, indexed in ascending
/// mask order.
struct ImplicationSubalgebra {
  ImplicationAlgebra algebra;
  std::vector<Mask> masks;  ///< index -> mask

  std::optional<Elem> index_of(Mask m) const;
};

/// Induced implication algebra on S. Requires 1 in S and closure under ->
/// and join; otherwise throws NotClosed naming the witness.
ImplicationSubalgebra implication_subalgebra(const BooleanAlgebra& B, const std::vector<Mask>& S);

/// The whole powerset algebra as an implication algebra.
ImplicationSubalgebra as_implication_algebra(const BooleanAlgebra& B);

/// Closure of a seed set (plus 1) under -> and join.
std::vector<Mask> implication_closure(const BooleanAlgebra& B, const std::vector<Mask>& seed);

}  // namespace mrkit
