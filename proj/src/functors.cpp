#include "mrkit/functors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mrkit/error.hpp"
#include "mrkit/subalgebra.hpp"

namespace mrkit {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_map(const std::vector<Elem>& map, std::size_t n, std::size_t target) {
  if (map.size() != n) throw Error(ErrorKind::MalformedTable, "map size does not match the source carrier");
  for (Elem v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= target) throw Error(ErrorKind::IndexOutOfRange, "map image out of range");
  }
}

}  // namespace

AxiomReport check_hom(const CubicHom& f) {
  const CubicAlgebra& A = *f.source;
  const CubicAlgebra& B = *f.target;
  require_map(f.map, A.size(), B.size());
  AxiomReport r;
  const auto n = static_cast<Elem>(A.size());
  if (f(A.one()) != B.one()) r.add("top", {});
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f(A.join(x, y)) != B.join(f(x), f(y))) r.add("join", {x, y});
      if (A.leq(y, x)) {
        const auto d = B.try_delta(f(x), f(y));
        if (!d || *d != f(A.delta(x, y))) r.add("delta", {x, y});
      }
      if (A.sim(x, y) && !B.sim(f(x), f(y))) r.add("sim", {x, y});
    }
  }
  return r;
}

AxiomReport check_implication_hom(const ImplicationHom& f) {
  const ImplicationAlgebra& A = *f.source;
  const ImplicationAlgebra& B = *f.target;
  require_map(f.map, A.size(), B.size());
  AxiomReport r;
  const auto n = static_cast<Elem>(A.size());
  if (f(A.one()) != B.one()) r.add("top", {});
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f(A.join(x, y)) != B.join(f(x), f(y))) r.add("join", {x, y});
      if (f(A.implies(x, y)) != B.implies(f(x), f(y))) r.add("implies", {x, y});
    }
  }
  return r;
}

bool is_bijective(const std::vector<Elem>& map, std::size_t target_size) {
  if (map.size() != target_size) return false;
  std::vector<char> hit(target_size, 0);
  for (Elem v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= target_size || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool is_isomorphism(const CubicHom& f) {
  return is_bijective(f.map, f.target->size()) && check_hom(f).passed;
}

bool is_isomorphism(const ImplicationHom& f) {
  return is_bijective(f.map, f.target->size()) && check_implication_hom(f).passed;
}

CubicHom functor_I_hom(const PairAlgebra& source, const PairAlgebra& target, const ImplicationHom& f) {
  require_map(f.map, source.base.size(), target.base.size());
  CubicHom out{&source.algebra, &target.algebra, {}};
  for (const auto& [a, b] : source.pairs) {
    const auto img = target.index_of(f(a), f(b));
    if (!img) {
      throw Error(ErrorKind::MembershipBroken, "image of <" + source.base.label(a) + "," + source.base.label(b) +
                                                   "> is not a pair of the target");
    }
    out.map.push_back(*img);
  }
  return out;
}

ElementSet Quotient::preimage(const ElementSet& classes_set) const {
  ElementSet out(class_of.size());
  for (std::size_t x = 0; x < class_of.size(); ++x) {
    if (classes_set.test(static_cast<std::size_t>(class_of[x]))) out.set(x);
  }
  return out;
}

ElementSet Quotient::image(const ElementSet& elements) const {
  ElementSet out(classes.size());
  for (auto x = elements.find_first(); x != ElementSet::npos; x = elements.find_next(x)) {
    out.set(static_cast<std::size_t>(class_of[x]));
  }
  return out;
}

Quotient quotient_C(const CubicAlgebra& A) {
  const std::size_t n = A.size();
  DisjointSets dsu(n);
  for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
    for (Elem y = x + 1; y < static_cast<Elem>(n); ++y) {
      if (A.sim(x, y)) dsu.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
  }
  std::map<std::size_t, Elem> root_class;
  std::vector<Elem> class_of(n);
  std::vector<std::vector<Elem>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = dsu.find(x);
    auto [it, fresh] = root_class.emplace(r, static_cast<Elem>(classes.size()));
    if (fresh) classes.emplace_back();
    class_of[x] = it->second;
    classes[static_cast<std::size_t>(it->second)].push_back(static_cast<Elem>(x));
  }
  const std::size_t k = classes.size();
  std::vector<Elem> join(k * k, kUndefined);
  for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
    for (Elem y = 0; y < static_cast<Elem>(n); ++y) {
      const auto cell = static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)]) * k +
                        static_cast<std::size_t>(class_of[static_cast<std::size_t>(y)]);
      const Elem c = class_of[static_cast<std::size_t>(A.star(x, y))];
      if (join[cell] == kUndefined) join[cell] = c;
      if (join[cell] != c) throw Error(ErrorKind::Internal, "star does not respect sim");
    }
  }
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = join[i * k + j] == static_cast<Elem>(j) ? 1 : 0;
  }
  const auto cls_leq = [&](std::size_t i, std::size_t j) { return leq[i * k + j] != 0; };
  const auto cls_meet = [&](std::size_t i, std::size_t j) -> Elem {
    Elem best = kUndefined;
    for (std::size_t c = 0; c < k; ++c) {
      if (!cls_leq(c, i) || !cls_leq(c, j)) continue;
      if (best == kUndefined || cls_leq(static_cast<std::size_t>(best), c)) best = static_cast<Elem>(c);
    }
    if (best == kUndefined) return kUndefined;
    for (std::size_t c = 0; c < k; ++c) {
      if (cls_leq(c, i) && cls_leq(c, j) && !cls_leq(c, static_cast<std::size_t>(best))) return kUndefined;
    }
    return best;
  };
  const Elem top = class_of[static_cast<std::size_t>(A.one())];
  std::vector<Elem> implies(k * k, kUndefined);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto u = static_cast<std::size_t>(join[i * k + j]);
      for (std::size_t c = 0; c < k; ++c) {
        if (!cls_leq(j, c)) continue;
        if (join[c * k + u] == top && cls_meet(c, u) == static_cast<Elem>(j)) {
          implies[i * k + j] = static_cast<Elem>(c);
          break;
        }
      }
      if (implies[i * k + j] == kUndefined) {
        throw Error(ErrorKind::Internal, "quotient interval is not complemented");
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& members : classes) labels.push_back("[" + A.label(members.back()) + "]");
  ImplicationAlgebra algebra(k, std::move(leq), std::move(join), std::move(implies), top, std::move(labels));
  return Quotient{&A, std::move(class_of), std::move(classes), std::move(algebra)};
}

ImplicationHom functor_C_hom(const Quotient& source, const Quotient& target, const CubicHom& f) {
  require_map(f.map, source.class_of.size(), target.class_of.size());
  ImplicationHom out{&source.algebra, &target.algebra, std::vector<Elem>(source.classes.size(), kUndefined)};
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    Elem& slot = out.map[static_cast<std::size_t>(source.class_of[x])];
    const Elem img = target.eta(f.map[x]);
    if (slot == kUndefined) slot = img;
    if (slot != img) throw Error(ErrorKind::Internal, "map does not respect sim");
  }
  return out;
}

ImplicationHom iota(const PairAlgebra& pa, const Quotient& q) {
  ImplicationHom out{&pa.base, &q.algebra, {}};
  for (Elem a = 0; a < static_cast<Elem>(pa.base.size()); ++a) out.map.push_back(q.eta(embed_e(pa, a)));
  return out;
}

ImplicationHom iota_inverse(const PairAlgebra& pa, const Quotient& q) {
  ImplicationHom out{&q.algebra, &pa.base, std::vector<Elem>(q.classes.size(), kUndefined)};
  for (std::size_t x = 0; x < pa.pairs.size(); ++x) {
    const auto [a, b] = pa.pairs[x];
    const Elem m = *pa.base.meet(a, b);
    Elem& slot = out.map[static_cast<std::size_t>(q.class_of[x])];
    if (slot == kUndefined) slot = m;
    if (slot != m) throw Error(ErrorKind::Internal, "pair meets disagree inside a class");
  }
  return out;
}

KappaMap kappa(const Quotient& q, const PairAlgebra& icq) {
  if (icq.base.size() != q.algebra.size()) throw Error(ErrorKind::Usage, "pair algebra is not over this quotient");
  KappaMap out;
  for (Elem c : q.class_of) out.map.push_back(embed_e(icq, c));
  std::vector<Elem> sorted = out.map;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  out.injective = distinct == out.map.size();
  out.surjective = distinct == icq.algebra.size();
  return out;
}

bool inclusion_collapse(const CubicAlgebra& A, const Quotient& q, const ElementSet& sub) {
  if (!is_upward_closed(A, sub) || !is_subalgebra(A, sub)) {
    throw Error(ErrorKind::NotUpwardClosed, "subset is not an upward-closed subalgebra");
  }
  const Subalgebra M = induced_subalgebra(A, sub);
  const Quotient qm = quotient_C(M.algebra);
  for (std::size_t i = 0; i < M.to_parent.size(); ++i) {
    for (std::size_t j = 0; j < M.to_parent.size(); ++j) {
      const bool same_m = qm.class_of[i] == qm.class_of[j];
      const bool same_a = q.eta(M.to_parent[i]) == q.eta(M.to_parent[j]);
      if (same_m != same_a) return false;
    }
    // the ambient class of a member stays inside M
    for (Elem y : q.classes[static_cast<std::size_t>(q.eta(M.to_parent[i]))]) {
      if (!sub.test(static_cast<std::size_t>(y))) return false;
    }
  }
  return true;
}

}  // namespace mrkit
