#include "mrkit/automorphism_search.hpp"

#include <algorithm>

#include "mrkit/error.hpp"
#include "mrkit/functors.hpp"

namespace mrkit {

namespace {

std::vector<std::pair<int, int>> order_signature(const Semilattice& L) {
  std::vector<std::pair<int, int>> sig;
  for (Elem x = 0; x < static_cast<Elem>(L.size()); ++x) {
    sig.emplace_back(static_cast<int>(L.down_set(x).count()), static_cast<int>(L.up_set(x).count()));
  }
  return sig;
}

std::vector<Elem> bottom_up_order(const std::vector<std::pair<int, int>>& sig) {
  std::vector<Elem> order(sig.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Elem>(i);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return sig[static_cast<std::size_t>(a)].first < sig[static_cast<std::size_t>(b)].first;
  });
  return order;
}

class Search {
 public:
  Search(const OpStructure& s, const OpStructure& t, std::size_t limit)
      : s_(s), t_(t), limit_(limit), fwd_(s.size, kUndefined), inv_(t.size, kUndefined) {}

  std::vector<Permutation> run() {
    if (s_.size != t_.size || s_.ops.size() != t_.ops.size()) return {};
    auto ss = s_.signature, ts = t_.signature;
    std::sort(ss.begin(), ss.end());
    std::sort(ts.begin(), ts.end());
    if (ss != ts) return {};
    descend(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool done() const { return limit_ != 0 && found_.size() >= limit_; }

  void descend(std::size_t pos) {
    if (done()) return;
    while (pos < s_.branch_order.size() && fwd_[static_cast<std::size_t>(s_.branch_order[pos])] != kUndefined) ++pos;
    if (pos == s_.branch_order.size()) {
      found_.push_back(fwd_);
      return;
    }
    const Elem x = s_.branch_order[pos];
    for (Elem y = 0; y < static_cast<Elem>(t_.size); ++y) {
      if (inv_[static_cast<std::size_t>(y)] != kUndefined) continue;
      if (s_.signature[static_cast<std::size_t>(x)] != t_.signature[static_cast<std::size_t>(y)]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && propagate()) descend(pos + 1);
      undo(mark);
      if (done()) return;
    }
  }

  bool assign(Elem x, Elem y) {
    const Elem cur = fwd_[static_cast<std::size_t>(x)];
    if (cur != kUndefined) return cur == y;
    if (inv_[static_cast<std::size_t>(y)] != kUndefined) return false;
    if (s_.signature[static_cast<std::size_t>(x)] != t_.signature[static_cast<std::size_t>(y)]) return false;
    fwd_[static_cast<std::size_t>(x)] = y;
    inv_[static_cast<std::size_t>(y)] = x;
    trail_.push_back(x);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const Elem x = trail_[head_++];
      for (std::size_t k = 0; k < head_; ++k) {
        const Elem z = trail_[k];
        for (std::size_t op = 0; op < s_.ops.size(); ++op) {
          if (!check(op, x, z) || !check(op, z, x)) return false;
        }
      }
    }
    return true;
  }

  bool check(std::size_t op, Elem a, Elem b) {
    const Elem r = s_.ops[op][static_cast<std::size_t>(a) * s_.size + static_cast<std::size_t>(b)];
    const Elem fa = fwd_[static_cast<std::size_t>(a)], fb = fwd_[static_cast<std::size_t>(b)];
    const Elem rt = t_.ops[op][static_cast<std::size_t>(fa) * t_.size + static_cast<std::size_t>(fb)];
    if ((r == kUndefined) != (rt == kUndefined)) return false;
    return r == kUndefined || assign(r, rt);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      inv_[static_cast<std::size_t>(fwd_[static_cast<std::size_t>(x)])] = kUndefined;
      fwd_[static_cast<std::size_t>(x)] = kUndefined;
    }
    head_ = std::min(head_, mark);
  }

  const OpStructure& s_;
  const OpStructure& t_;
  std::size_t limit_;
  Permutation fwd_, inv_;
  std::vector<Elem> trail_;
  std::size_t head_ = 0;
  std::vector<Permutation> found_;
};

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "automorphism search refuses carrier " + std::to_string(n) + " above cap " +
                                            std::to_string(cap));
  }
}

}  // namespace

OpStructure cubic_structure(const CubicAlgebra& A) {
  OpStructure s;
  s.size = A.size();
  s.ops = {A.join_table(), A.delta_table()};
  s.signature = order_signature(A);
  s.branch_order = bottom_up_order(s.signature);
  return s;
}

OpStructure implication_structure(const ImplicationAlgebra& A) {
  OpStructure s;
  s.size = A.size();
  s.ops = {A.implies_table(), A.join_table()};
  s.signature = order_signature(A);
  s.branch_order = bottom_up_order(s.signature);
  return s;
}

std::vector<Permutation> enumerate_isomorphisms(const OpStructure& source, const OpStructure& target,
                                                std::size_t limit) {
  return Search(source, target, limit).run();
}

std::vector<Permutation> enumerate_aut(const CubicAlgebra& A, std::size_t max_carrier) {
  require_cap(A.size(), max_carrier);
  const auto s = cubic_structure(A);
  return enumerate_isomorphisms(s, s);
}

std::vector<Permutation> enumerate_aut(const ImplicationAlgebra& A, std::size_t max_carrier) {
  require_cap(A.size(), max_carrier);
  const auto s = implication_structure(A);
  return enumerate_isomorphisms(s, s);
}

std::optional<Permutation> find_isomorphism(const CubicAlgebra& source, const CubicAlgebra& target) {
  auto found = enumerate_isomorphisms(cubic_structure(source), cubic_structure(target), 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<Permutation> find_isomorphism(const ImplicationAlgebra& source, const ImplicationAlgebra& target) {
  auto found = enumerate_isomorphisms(implication_structure(source), implication_structure(target), 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>(i);
  return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f.at(static_cast<std::size_t>(g[i]));
  return out;
}

Permutation inverse(const Permutation& f) {
  Permutation out(f.size(), kUndefined);
  for (std::size_t i = 0; i < f.size(); ++i) out.at(static_cast<std::size_t>(f[i])) = static_cast<Elem>(i);
  return out;
}

bool is_automorphism(const CubicAlgebra& A, const Permutation& f) {
  return is_isomorphism(CubicHom{&A, &A, f});
}

}  // namespace mrkit
