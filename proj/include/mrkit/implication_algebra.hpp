#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrkit/semilattice.hpp"

namespace mrkit {

/// Finite implication algebra given by its order, join and implication
/// tables. Meets are partial.
class ImplicationAlgebra : public Semilattice {
 public:
  /// Strict construction: checks the semilattice laws and
  /// x->x = 1, (x->y)->y = x v y, x->(y->z) = y->(x->z), (x->y)->x = x,
  /// and x <= y iff x->y = 1.
  ImplicationAlgebra(std::size_t n, std::vector<std::uint8_t> leq, std::vector<Elem> join, std::vector<Elem> implies,
                     Elem one, std::vector<std::string> labels);

  /// Derives order and join from the implication table alone.
  static ImplicationAlgebra from_implies(std::size_t n, const std::vector<Elem>& implies, Elem one,
                                         std::vector<std::string> labels);

  Elem implies(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return implies_[idx(x, y)];
  }

  /// Every pair has a greatest lower bound.
  bool is_lattice() const;
  /// Least element, if any.
  std::optional<Elem> bottom() const;

  const std::vector<Elem>& implies_table() const { return implies_; }

 private:
  std::vector<Elem> implies_;
};

}  // namespace mrkit
