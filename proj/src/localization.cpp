#include "mrkit/localization.hpp"

#include <map>
#include <utility>

#include "mrkit/cubic_algebra.hpp"
#include "mrkit/error.hpp"
#include "mrkit/subalgebra.hpp"

namespace mrkit {

Elem Localization::k(Elem y) const {
  if (y < 0 || static_cast<std::size_t>(y) >= k_map.size() || k_map[static_cast<std::size_t>(y)] == kUndefined) {
    throw Error(ErrorKind::IndexOutOfRange, "element is not a member of the localization");
  }
  return k_map[static_cast<std::size_t>(y)];
}

Elem Localization::l(Elem y) const {
  if (y < 0 || static_cast<std::size_t>(y) >= l_map.size() || l_map[static_cast<std::size_t>(y)] == kUndefined) {
    throw Error(ErrorKind::IndexOutOfRange, "element is not a member of the localization");
  }
  return l_map[static_cast<std::size_t>(y)];
}

ElementSet localization_by_reflection(const CubicAlgebra& A, Elem a) {
  ElementSet out = A.empty_set();
  const ElementSet& above = A.up_set(a);
  for (auto x = above.find_first(); x != ElementSet::npos; x = above.find_next(x)) {
    const ElementSet& ux = A.up_set(static_cast<Elem>(x));
    for (auto y = ux.find_first(); y != ElementSet::npos; y = ux.find_next(y)) {
      out.set(static_cast<std::size_t>(A.delta(static_cast<Elem>(y), static_cast<Elem>(x))));
    }
  }
  return out;
}

ElementSet localization_by_preceq(const CubicAlgebra& A, Elem a) {
  ElementSet out = A.empty_set();
  for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
    if (A.preceq(a, x)) out.set(static_cast<std::size_t>(x));
  }
  return out;
}

Localization localize(const CubicAlgebra& A, Elem a, bool verify) {
  A.check_index(a);
  Localization loc;
  loc.point = a;
  loc.members = localization_by_reflection(A, a);
  loc.k_map.assign(A.size(), kUndefined);
  loc.l_map.assign(A.size(), kUndefined);
  for (Elem y : to_vector(loc.members)) {
    loc.k_map[static_cast<std::size_t>(y)] = A.implies(A.join(A.antipode(y), a), a);
    loc.l_map[static_cast<std::size_t>(y)] = A.join(y, a);
  }
  if (verify) {
    const AxiomReport report = verify_localization(A, loc);
    if (!report.passed) {
      const Violation& v = report.violations.front();
      throw Error(ErrorKind::Internal, "localization at " + A.label(a) + " fails " + v.axiom + " at " +
                                           format_witness(A, v.witness));
    }
  }
  return loc;
}

AxiomReport verify_localization(const CubicAlgebra& A, const Localization& loc) {
  AxiomReport report;
  const Elem a = loc.point;
  const std::vector<Elem> members = to_vector(loc.members);

  if (loc.members != localization_by_preceq(A, a)) report.add("kl-e", {a});

  for (Elem y : members) {
    const Elem k = loc.k(y), l = loc.l(y);
    if (!(A.leq(k, l) && A.leq(a, k) && A.leq(a, l))) report.add("kl-b", {y});
  }

  const Elem anti_a = A.antipode(a);
  std::map<std::pair<Elem, Elem>, Elem> by_pair;
  for (Elem y : members) {
    auto [it, fresh] = by_pair.emplace(std::pair{loc.l(y), loc.k(y)}, y);
    if (!fresh) report.add("kl-c", {it->second, y});
  }
  for (Elem x : members) {
    for (Elem y : members) {
      if (x >= y) continue;
      if (A.join(x, a) == A.join(y, a) && A.join(x, anti_a) == A.join(y, anti_a)) report.add("kl-c", {x, y});
    }
  }

  const ElementSet& above = A.up_set(a);
  for (auto q = above.find_first(); q != ElementSet::npos; q = above.find_next(q)) {
    const ElementSet& uq = A.up_set(static_cast<Elem>(q));
    for (auto p = uq.find_first(); p != ElementSet::npos; p = uq.find_next(p)) {
      if (!by_pair.count({static_cast<Elem>(p), static_cast<Elem>(q)})) {
        report.add("kl-d", {static_cast<Elem>(p), static_cast<Elem>(q)});
      }
    }
  }
  for (const auto& [key, y] : by_pair) {
    if (!A.leq(key.second, key.first)) report.add("kl-d", {y});
  }

  // Induced algebra: MR and atomic (every member dominates a minimal member).
  try {
    const Subalgebra sub = induced_subalgebra(A, loc.members, Validation::Raw);
    if (!check_mr_axiom(sub.algebra).passed) report.add("kl-a-mr", {a});
    const auto minimal = sub.algebra.minimal_elements();
    for (Elem y = 0; y < static_cast<Elem>(sub.algebra.size()); ++y) {
      bool dominates = false;
      for (Elem m : minimal) dominates = dominates || sub.algebra.leq(m, y);
      if (!dominates) report.add("kl-a-atomic", {sub.to_parent[static_cast<std::size_t>(y)]});
    }
  } catch (const Error&) {
    report.add("kl-a-mr", {a});
  }
  return report;
}

Elem from_pair(const CubicAlgebra& A, const Localization& loc, Elem p, Elem q) {
  A.check_index(p);
  A.check_index(q);
  if (!(A.leq(q, p) && A.leq(loc.point, q))) {
    throw Error(ErrorKind::NoSuchPair, "need " + A.label(p) + " >= " + A.label(q) + " >= " + A.label(loc.point));
  }
  for (Elem y : to_vector(loc.members)) {
    if (loc.l(y) == p && loc.k(y) == q) return y;
  }
  throw Error(ErrorKind::NoSuchPair, "no member with l = " + A.label(p) + " and k = " + A.label(q));
}

}  // namespace mrkit
