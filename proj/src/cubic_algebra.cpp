#include "mrkit/cubic_algebra.hpp"

#include <string>

#include "mrkit/axioms.hpp"
#include "mrkit/error.hpp"

namespace mrkit {

namespace {

template <typename T>
std::vector<T> flatten(const std::vector<std::vector<T>>& rows, std::size_t n, const char* name) {
  if (rows.size() != n) throw Error(ErrorKind::MalformedTable, std::string(name) + " must have " + std::to_string(n) + " rows");
  std::vector<T> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::MalformedTable, std::string(name) + " rows must have " + std::to_string(n) + " entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

CubicAlgebra CubicAlgebra::from_tables(const CubicTables& t, Validation mode) {
  const std::size_t n = t.carrier;
  std::vector<std::uint8_t> leq;
  leq.reserve(n * n);
  for (int v : flatten(t.leq, n, "leq")) {
    if (v != 0 && v != 1) throw Error(ErrorKind::MalformedTable, "leq entries must be 0 or 1");
    leq.push_back(static_cast<std::uint8_t>(v));
  }
  return CubicAlgebra(n, std::move(leq), flatten(t.join, n, "join"), flatten(t.delta, n, "delta"), t.one, t.labels, mode);
}

CubicAlgebra::CubicAlgebra(std::size_t n, std::vector<std::uint8_t> leq, std::vector<Elem> join,
                           std::vector<Elem> delta, Elem one, std::vector<std::string> labels, Validation mode)
    : Semilattice(n, std::move(leq), std::move(join), one, std::move(labels)), delta_(std::move(delta)), mode_(mode) {
  if (delta_.size() != n * n) throw Error(ErrorKind::MalformedTable, "delta table must be n x n");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem d = delta_[x * n + y];
      const bool comparable = leq_table()[y * n + x] != 0;
      if (comparable && !valid_index(d)) {
        throw Error(ErrorKind::MalformedTable, "delta(" + std::to_string(x) + "," + std::to_string(y) + ") must be defined");
      }
      if (!comparable && d != kUndefined) {
        throw Error(ErrorKind::MalformedTable, "delta(" + std::to_string(x) + "," + std::to_string(y) + ") must be -1");
      }
    }
  }
  if (mode_ == Validation::Strict) {
    const AxiomReport report = check_cubic_axioms(*this, WitnessPolicy::First);
    if (!report.passed) {
      throw Error(ErrorKind::AxiomViolation, "cubic axiom " + report.violations.front().axiom + " fails at " +
                                                 format_witness(*this, report.violations.front().witness));
    }
  }
}

CubicTables CubicAlgebra::tables() const {
  CubicTables t;
  const std::size_t n = size();
  t.carrier = n;
  t.one = one();
  t.labels = labels();
  t.leq.assign(n, std::vector<int>(n));
  t.join.assign(n, std::vector<Elem>(n));
  t.delta.assign(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t.leq[x][y] = leq_table()[x * n + y];
      t.join[x][y] = join_table()[x * n + y];
      t.delta[x][y] = delta_[x * n + y];
    }
  }
  return t;
}

std::optional<Elem> CubicAlgebra::try_delta(Elem x, Elem y) const {
  check_index(x);
  check_index(y);
  const Elem d = delta_[idx(x, y)];
  if (d == kUndefined) return std::nullopt;
  return d;
}

Elem CubicAlgebra::delta(Elem x, Elem y) const {
  if (auto d = try_delta(x, y)) return *d;
  throw Error(ErrorKind::DeltaUndefined, "Delta(" + label(x) + ", " + label(y) + ") needs " + label(y) + " <= " + label(x));
}

Elem CubicAlgebra::implies(Elem x, Elem y) const {
  return join(antipode(delta(join(x, y), y)), y);
}

std::optional<Elem> CubicAlgebra::caret(Elem x, Elem y) const {
  return meet(x, delta(join(x, y), y));
}

Elem CubicAlgebra::star(Elem x, Elem y) const {
  return join(x, delta(join(x, y), y));
}

bool CubicAlgebra::preceq(Elem a, Elem b) const {
  return leq(delta(join(a, b), a), b);
}

bool CubicAlgebra::sim(Elem a, Elem b) const {
  return delta(join(a, b), a) == b;
}

}  // namespace mrkit
