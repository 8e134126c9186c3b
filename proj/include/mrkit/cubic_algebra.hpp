#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrkit/semilattice.hpp"

namespace mrkit {

enum class Validation {
  Strict,  ///< tables and all cubic axioms are enforced at construction
  Raw,     ///< only table shape is enforced; used to feed the model checker
};

/// Row-major description of a cubic algebra, as read from or written to JSON.
struct CubicTables {
  std::size_t carrier = 0;
  Elem one = 0;
  std::vector<std::vector<int>> leq;     ///< 0/1 matrix
  std::vector<std::vector<Elem>> join;   ///< total
  std::vector<std::vector<Elem>> delta;  ///< delta[x][y] = Delta(x, y), -1 unless y <= x
  std::vector<std::string> labels;       ///< optional
};

/// Finite cubic implication algebra: a join semilattice with top and the
/// partial reflection Delta(x, y), defined exactly when y <= x.
///
/// Immutable after construction. All derived operations are pure.
class CubicAlgebra : public Semilattice {
 public:
  static CubicAlgebra from_tables(const CubicTables& tables, Validation mode = Validation::Strict);

  /// Flat constructor used by the builders (tables already row-major).
  CubicAlgebra(std::size_t n, std::vector<std::uint8_t> leq, std::vector<Elem> join, std::vector<Elem> delta,
               Elem one, std::vector<std::string> labels, Validation mode = Validation::Strict);

  CubicTables tables() const;

  /// Delta(x, y); throws DeltaUndefined unless y <= x.
  Elem delta(Elem x, Elem y) const;
  /// Delta(x, y) or nullopt when undefined.
  std::optional<Elem> try_delta(Elem x, Elem y) const;
  /// Delta(1, x).
  Elem antipode(Elem x) const { return delta(one(), x); }

  /// x -> y = Delta(1, Delta(x v y, y)) v y.
  Elem implies(Elem x, Elem y) const;
  /// x ^ y = x meet Delta(x v y, y), when that meet exists.
  std::optional<Elem> caret(Elem x, Elem y) const;
  /// x * y = x v Delta(x v y, y).
  Elem star(Elem x, Elem y) const;

  /// a <~ b iff Delta(a v b, a) <= b.
  bool preceq(Elem a, Elem b) const;
  /// a ~ b iff Delta(a v b, a) = b.
  bool sim(Elem a, Elem b) const;

  Validation validation() const { return mode_; }
  const std::vector<Elem>& delta_table() const { return delta_; }

 private:
  std::vector<Elem> delta_;
  Validation mode_;
};

}  // namespace mrkit
