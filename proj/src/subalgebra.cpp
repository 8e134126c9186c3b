#include "mrkit/subalgebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mrkit/error.hpp"

namespace mrkit {

namespace {

struct Unclosed {
  const char* op;
  Elem x, y;
};

std::optional<Unclosed> find_unclosed(const CubicAlgebra& A, const ElementSet& S) {
  if (!S.test(static_cast<std::size_t>(A.one()))) return Unclosed{"one", A.one(), A.one()};
  const std::vector<Elem> members = to_vector(S);
  for (Elem x : members) {
    for (Elem y : members) {
      if (!S.test(static_cast<std::size_t>(A.join(x, y)))) return Unclosed{"join", x, y};
      if (auto d = A.try_delta(x, y); d && !S.test(static_cast<std::size_t>(*d))) return Unclosed{"delta", x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_subalgebra(const CubicAlgebra& A, const ElementSet& S) { return !find_unclosed(A, S); }

bool is_upward_closed(const CubicAlgebra& A, const ElementSet& S) {
  for (Elem x : to_vector(S)) {
    if (!A.up_set(x).is_subset_of(S)) return false;
  }
  return true;
}

Subalgebra induced_subalgebra(const CubicAlgebra& A, const ElementSet& S, Validation mode) {
  if (S.size() != A.size()) throw Error(ErrorKind::IndexOutOfRange, "subset sized for another carrier");
  if (auto bad = find_unclosed(A, S)) {
    throw Error(ErrorKind::NotClosed, std::string("subset not closed under ") + bad->op + " at (" + A.label(bad->x) +
                                          ", " + A.label(bad->y) + ")");
  }
  std::vector<Elem> to_parent = to_vector(S);
  std::vector<Elem> from_parent(A.size(), kUndefined);
  for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[static_cast<std::size_t>(to_parent[i])] = static_cast<Elem>(i);

  const std::size_t m = to_parent.size();
  std::vector<std::uint8_t> leq(m * m);
  std::vector<Elem> join(m * m), delta(m * m, kUndefined);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(A.label(to_parent[i]));
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = to_parent[i], y = to_parent[j];
      leq[i * m + j] = A.leq(x, y) ? 1 : 0;
      join[i * m + j] = from_parent[static_cast<std::size_t>(A.join(x, y))];
      if (auto d = A.try_delta(x, y)) delta[i * m + j] = from_parent[static_cast<std::size_t>(*d)];
    }
  }
  CubicAlgebra sub(m, std::move(leq), std::move(join), std::move(delta), from_parent[static_cast<std::size_t>(A.one())],
                   std::move(labels), mode);
  return Subalgebra{std::move(sub), std::move(to_parent), std::move(from_parent)};
}

ElementSet upward_closed_subalgebra_closure(const CubicAlgebra& A, const ElementSet& seed) {
  ElementSet S = seed;
  S.set(static_cast<std::size_t>(A.one()));
  bool changed = true;
  while (changed) {
    changed = false;
    ElementSet next = S;
    const std::vector<Elem> members = to_vector(S);
    for (Elem x : members) {
      next |= A.up_set(x);
      for (Elem y : members) {
        if (auto d = A.try_delta(x, y)) next.set(static_cast<std::size_t>(*d));
      }
    }
    if (next != S) {
      S = std::move(next);
      changed = true;
    }
  }
  return S;
}

std::vector<ElementSet> enumerate_upward_closed_subalgebras(const CubicAlgebra& A) {
  std::set<ElementSet> seen;
  std::deque<ElementSet> queue;
  ElementSet start = upward_closed_subalgebra_closure(A, A.empty_set());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    ElementSet S = std::move(queue.front());
    queue.pop_front();
    for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
      if (S.test(static_cast<std::size_t>(x))) continue;
      ElementSet seed = S;
      seed.set(static_cast<std::size_t>(x));
      ElementSet next = upward_closed_subalgebra_closure(A, seed);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace mrkit
