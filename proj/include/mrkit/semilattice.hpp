#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrkit/types.hpp"

namespace mrkit {

/// Finite join semilattice with top, stored as explicit tables.
///
/// Shared base of cubic and implication algebras. The order and join tables
/// are taken as given; law checking belongs to the concrete algebra types.
/// Meets are partial and precomputed by a lower-bound scan.
class Semilattice {
 public:
  std::size_t size() const { return n_; }
  Elem one() const { return one_; }

  bool leq(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return leq_[idx(x, y)] != 0;
  }
  bool less(Elem x, Elem y) const { return x != y && leq(x, y); }

  Elem join(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return join_[idx(x, y)];
  }

  /// Greatest lower bound, or nullopt when it does not exist.
  std::optional<Elem> meet(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    const Elem m = meet_[idx(x, y)];
    if (m == kUndefined) return std::nullopt;
    return m;
  }

  /// Principal up-set [x, 1].
  const ElementSet& up_set(Elem x) const {
    check_index(x);
    return up_[static_cast<std::size_t>(x)];
  }
  const ElementSet& down_set(Elem x) const {
    check_index(x);
    return down_[static_cast<std::size_t>(x)];
  }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet full_set() const {
    ElementSet s(n_);
    s.set();
    return s;
  }

  /// Elements with no strictly smaller element.
  std::vector<Elem> minimal_elements() const;
  /// Minimal members of `set`.
  std::vector<Elem> minimal_elements(const ElementSet& set) const;

  const std::string& label(Elem x) const {
    check_index(x);
    return labels_[static_cast<std::size_t>(x)];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the element carrying `label`, if any.
  std::optional<Elem> find_label(const std::string& label) const;
  /// Like find_label but throws IndexOutOfRange for unknown labels.
  Elem at(const std::string& label) const;

  void check_index(Elem x) const;
  bool valid_index(Elem x) const { return x >= 0 && static_cast<std::size_t>(x) < n_; }

  /// Raw row-major tables (n*n).
  const std::vector<Elem>& join_table() const { return join_; }
  const std::vector<Elem>& meet_table() const { return meet_; }
  const std::vector<std::uint8_t>& leq_table() const { return leq_; }

 protected:
  Semilattice(std::size_t n, std::vector<std::uint8_t> leq, std::vector<Elem> join, Elem one,
              std::vector<std::string> labels);

  std::size_t idx(Elem x, Elem y) const {
    return static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y);
  }

  /// Validates the semilattice laws, throwing AxiomViolation with a witness.
  void require_semilattice_laws() const;

 private:
  std::size_t n_;
  Elem one_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

}  // namespace mrkit
