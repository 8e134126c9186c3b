#include "mrkit/semilattice.hpp"

#include <string>

#include "mrkit/error.hpp"

namespace mrkit {

Semilattice::Semilattice(std::size_t n, std::vector<std::uint8_t> leq, std::vector<Elem> join, Elem one,
                         std::vector<std::string> labels)
    : n_(n), one_(one), leq_(std::move(leq)), join_(std::move(join)), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorKind::MalformedTable, "carrier must be non-empty");
  if (leq_.size() != n_ * n_) throw Error(ErrorKind::MalformedTable, "leq table must be n x n");
  if (join_.size() != n_ * n_) throw Error(ErrorKind::MalformedTable, "join table must be n x n");
  if (!valid_index(one_)) throw Error(ErrorKind::MalformedTable, "one is not a carrier index");
  for (Elem v : join_) {
    if (!valid_index(v)) throw Error(ErrorKind::MalformedTable, "join entry " + std::to_string(v) + " out of range");
  }
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != n_) throw Error(ErrorKind::MalformedTable, "label count differs from carrier size");

  up_.assign(n_, ElementSet(n_));
  down_.assign(n_, ElementSet(n_));
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (leq_[x * n_ + y]) {
        up_[x].set(y);
        down_[y].set(x);
      }
    }
  }

  meet_.assign(n_ * n_, kUndefined);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = x; y < n_; ++y) {
      const ElementSet lower = down_[x] & down_[y];
      Elem best = kUndefined;
      for (auto z = lower.find_first(); z != ElementSet::npos; z = lower.find_next(z)) {
        if (lower.is_subset_of(down_[z])) {
          best = static_cast<Elem>(z);
          break;
        }
      }
      meet_[x * n_ + y] = best;
      meet_[y * n_ + x] = best;
    }
  }
}

std::vector<Elem> Semilattice::minimal_elements() const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (down_[x].count() == 1 && down_[x].test(x)) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

std::vector<Elem> Semilattice::minimal_elements(const ElementSet& set) const {
  std::vector<Elem> out;
  for (std::size_t x = set.find_first(); x != ElementSet::npos; x = set.find_next(x)) {
    if ((down_[x] & set).count() == 1) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

std::optional<Elem> Semilattice::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem Semilattice::at(const std::string& label) const {
  if (auto e = find_label(label)) return *e;
  throw Error(ErrorKind::IndexOutOfRange, "no element labelled '" + label + "'");
}

void Semilattice::check_index(Elem x) const {
  if (!valid_index(x)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(x) + " outside carrier of size " + std::to_string(n_));
  }
}

void Semilattice::require_semilattice_laws() const {
  const auto fail = [](const std::string& what) { throw Error(ErrorKind::AxiomViolation, what); };
  for (std::size_t x = 0; x < n_; ++x) {
    if (!leq_[x * n_ + x]) fail("order not reflexive at " + labels_[x]);
    if (!leq_[x * n_ + static_cast<std::size_t>(one_)]) fail("one is not above " + labels_[x]);
    for (std::size_t y = 0; y < n_; ++y) {
      if (x != y && leq_[x * n_ + y] && leq_[y * n_ + x]) fail("order not antisymmetric at " + labels_[x] + "," + labels_[y]);
      const auto j = static_cast<std::size_t>(join_[x * n_ + y]);
      if (!leq_[x * n_ + j] || !leq_[y * n_ + j]) fail("join is not an upper bound at " + labels_[x] + "," + labels_[y]);
      // least: every upper bound of x,y is above j
      const ElementSet upper = up_[x] & up_[y];
      if (!upper.is_subset_of(up_[j])) fail("join is not least at " + labels_[x] + "," + labels_[y]);
    }
    // transitivity: up(x) is closed upward
    for (auto y = up_[x].find_first(); y != ElementSet::npos; y = up_[x].find_next(y)) {
      if (!up_[y].is_subset_of(up_[x])) fail("order not transitive through " + labels_[x] + "," + labels_[y]);
    }
  }
}

}  // namespace mrkit
