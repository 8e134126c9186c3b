#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrkit/types.hpp"

namespace mrkit {

class CubicAlgebra;
class Semilattice;

enum class WitnessPolicy {
  First,  ///< lexicographically first witness tuple per axiom
  All,    ///< every witness tuple, in lexicographic order
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;

  bool operator==(const Violation&) const = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<Elem> witness) {
    passed = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool mentions(const std::string& axiom) const;
};

/// Exhaustive check of the semilattice laws and cubic axioms a-f.
///
/// Axiom ids: order-reflexive, order-antisymmetric, order-transitive,
/// join-upper, join-least, one-top, a, b, c, d, e, f. Witness tuples follow
/// the variable order of the axiom statement (x, y[, z]). A term that is
/// undefined because an earlier law already fails counts as a violation.
AxiomReport check_cubic_axioms(const CubicAlgebra& algebra, WitnessPolicy policy = WitnessPolicy::First);

/// Metropolis-Rota axiom: for a, b < x, Delta(x,a) v b < x iff a meet b does
/// not exist. Witness tuples are (x, a, b).
AxiomReport check_mr_axiom(const CubicAlgebra& algebra, WitnessPolicy policy = WitnessPolicy::First);

/// True iff x ^ y exists for every pair.
bool caret_total(const CubicAlgebra& algebra);
/// Lexicographically first pair with an undefined caret.
std::optional<std::pair<Elem, Elem>> first_caret_failure(const CubicAlgebra& algebra);

/// True iff the witness really violates the named axiom (cubic or "mr").
bool replay_violation(const CubicAlgebra& algebra, const Violation& violation);

std::string format_witness(const Semilattice& algebra, const std::vector<Elem>& witness);

}  // namespace mrkit
