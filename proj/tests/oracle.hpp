#pragma once

// Direct mask arithmetic on pairs <a, b> of subsets of n atoms, kept
// independent of the table-driven library code.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Pair {
  unsigned a, b;
  bool operator==(const Pair&) const = default;
};

struct Cube {
  unsigned n;
  unsigned top() const { return (1u << n) - 1; }
  bool leq(Pair x, Pair y) const { return (x.a & ~y.a) == 0 && (x.b & ~y.b) == 0; }
  Pair join(Pair x, Pair y) const { return {x.a | y.a, x.b | y.b}; }
  unsigned imp(unsigned x, unsigned y) const { return (~x | y) & top(); }
  // Delta(x, y), y <= x
  Pair delta(Pair x, Pair y) const { return {x.a & imp(x.b, y.b), x.b & imp(x.a, y.a)}; }
  std::optional<Pair> meet(Pair x, Pair y) const {
    Pair m{x.a & y.a, x.b & y.b};
    if ((m.a | m.b) != top()) return std::nullopt;
    return m;
  }
  std::vector<Pair> carrier() const {
    std::vector<Pair> out;
    for (unsigned a = 0; a <= top(); ++a)
      for (unsigned b = 0; b <= top(); ++b)
        if ((a | b) == top()) out.push_back({a, b});
    return out;
  }
  std::string name(unsigned m) const {
    if (m == top()) return "1";
    if (m == 0) return "0";
    std::string s;
    for (unsigned i = 0; i < n; ++i)
      if (m & (1u << i)) s += "pqrs"[i];
    return s;
  }
  std::string label(Pair x) const { return "<" + name(x.a) + "," + name(x.b) + ">"; }
};

}  // namespace oracle
