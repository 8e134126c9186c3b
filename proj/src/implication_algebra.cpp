#include "mrkit/implication_algebra.hpp"

#include "mrkit/error.hpp"

namespace mrkit {

ImplicationAlgebra::ImplicationAlgebra(std::size_t n, std::vector<std::uint8_t> leq_table,
                                       std::vector<Elem> join_table, std::vector<Elem> implies_table, Elem top,
                                       std::vector<std::string> labels)
    : Semilattice(n, std::move(leq_table), std::move(join_table), top, std::move(labels)),
      implies_(std::move(implies_table)) {
  if (implies_.size() != n * n) throw Error(ErrorKind::MalformedTable, "implies table must be n x n");
  for (Elem v : implies_) {
    if (!valid_index(v)) throw Error(ErrorKind::MalformedTable, "implies entry out of range");
  }
  require_semilattice_laws();
  const auto N = static_cast<Elem>(n);
  const auto fail = [&](const std::string& law, std::initializer_list<Elem> w) {
    std::string at;
    for (Elem e : w) at += (at.empty() ? "" : ",") + label(e);
    throw Error(ErrorKind::AxiomViolation, "implication law " + law + " fails at (" + at + ")");
  };
  for (Elem x = 0; x < N; ++x) {
    if (implies(x, x) != top) fail("x->x=1", {x});
    for (Elem y = 0; y < N; ++y) {
      if (implies(implies(x, y), y) != Semilattice::join(x, y)) fail("(x->y)->y=xvy", {x, y});
      if (implies(implies(x, y), x) != x) fail("(x->y)->x=x", {x, y});
      if (leq(x, y) != (implies(x, y) == top)) fail("x<=y iff x->y=1", {x, y});
      for (Elem z = 0; z < N; ++z) {
        if (implies(x, implies(y, z)) != implies(y, implies(x, z))) fail("x->(y->z)=y->(x->z)", {x, y, z});
      }
    }
  }
}

ImplicationAlgebra ImplicationAlgebra::from_implies(std::size_t n, const std::vector<Elem>& implies, Elem one,
                                                    std::vector<std::string> labels) {
  if (implies.size() != n * n) throw Error(ErrorKind::MalformedTable, "implies table must be n x n");
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = implies[x * n + y];
      if (xy < 0 || static_cast<std::size_t>(xy) >= n) throw Error(ErrorKind::MalformedTable, "implies entry out of range");
      leq[x * n + y] = xy == one ? 1 : 0;
      join[x * n + y] = implies[static_cast<std::size_t>(xy) * n + y];
    }
  }
  return ImplicationAlgebra(n, std::move(leq), std::move(join), implies, one, std::move(labels));
}

bool ImplicationAlgebra::is_lattice() const {
  for (Elem m : meet_table()) {
    if (m == kUndefined) return false;
  }
  return true;
}

std::optional<Elem> ImplicationAlgebra::bottom() const {
  for (Elem x = 0; x < static_cast<Elem>(size()); ++x) {
    if (up_set(x).all()) return x;
  }
  return std::nullopt;
}

}  // namespace mrkit
