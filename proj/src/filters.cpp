#include "mrkit/filters.hpp"

#include <deque>
#include <set>

#include "mrkit/error.hpp"

namespace mrkit {

namespace {

void require_same(const Filter& a, const Filter& b) {
  if (&a.algebra() != &b.algebra()) throw Error(ErrorKind::Usage, "filters belong to different algebras");
}

void require_subfilter(const Filter& g, const Filter& f) {
  require_same(g, f);
  if (!g.subset_of(f)) throw Error(ErrorKind::NotSubfilter, "G is not contained in F");
}

ElementSet up_closure(const Semilattice& L, const ElementSet& seed) {
  ElementSet out = L.empty_set();
  for (auto i = seed.find_first(); i != ElementSet::npos; i = seed.find_next(i)) out |= L.up_set(static_cast<Elem>(i));
  return out;
}

}  // namespace

std::string filter_defect(const Semilattice& L, const ElementSet& set) {
  if (set.size() != L.size()) return "set size does not match the carrier";
  if (!set.test(static_cast<std::size_t>(L.one()))) return "does not contain 1";
  const auto members = to_vector(set);
  for (Elem x : members) {
    if (!L.up_set(x).is_subset_of(set)) return "not upward closed above " + L.label(x);
  }
  for (Elem x : members) {
    for (Elem y : members) {
      const auto m = L.meet(x, y);
      if (!m) return "no meet of " + L.label(x) + " and " + L.label(y);
      if (!set.test(static_cast<std::size_t>(*m))) return "missing meet of " + L.label(x) + " and " + L.label(y);
    }
  }
  return {};
}

Filter Filter::make(const Semilattice& L, ElementSet members) {
  const std::string defect = filter_defect(L, members);
  if (!defect.empty()) throw Error(ErrorKind::NotAFilter, defect);
  return Filter(&L, std::move(members));
}

Filter Filter::make(const Semilattice& L, const std::vector<Elem>& members) {
  for (Elem x : members) L.check_index(x);
  return make(L, make_set(L.size(), members));
}

Filter Filter::principal(const Semilattice& L, Elem x) { return Filter(&L, L.up_set(x)); }

Filter Filter::top(const Semilattice& L) { return Filter(&L, L.up_set(L.one())); }

Filter Filter::whole(const Semilattice& L) { return generated(L, L.full_set()); }

Filter Filter::generated(const Semilattice& L, const ElementSet& seed) {
  auto f = try_generated(L, seed);
  if (!f) throw Error(ErrorKind::NotAFilter, "no filter contains the seed");
  return std::move(*f);
}

std::optional<Filter> Filter::try_generated(const Semilattice& L, const ElementSet& seed) {
  ElementSet cur = seed;
  cur.set(static_cast<std::size_t>(L.one()));
  cur = up_closure(L, cur);
  for (;;) {
    ElementSet next = cur;
    const auto members = to_vector(cur);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto m = L.meet(members[i], members[j]);
        if (!m) return std::nullopt;
        next.set(static_cast<std::size_t>(*m));
      }
    }
    next = up_closure(L, next);
    if (next == cur) return Filter(&L, std::move(cur));
    cur = std::move(next);
  }
}

Filter filter_meet(const Filter& g, const Filter& h) {
  require_same(g, h);
  return Filter::make(g.algebra(), g.members() & h.members());
}

Filter filter_join(const Filter& g, const Filter& h) {
  require_same(g, h);
  return Filter::generated(g.algebra(), g.members() | h.members());
}

std::optional<Filter> try_filter_join(const Filter& g, const Filter& h) {
  require_same(g, h);
  return Filter::try_generated(g.algebra(), g.members() | h.members());
}

std::vector<Filter> enumerate_filters(const Semilattice& L, std::size_t max_carrier) {
  if (L.size() > max_carrier) {
    throw Error(ErrorKind::CapExceeded, "filter enumeration refuses carrier " + std::to_string(L.size()));
  }
  std::set<Filter> seen;
  std::deque<Filter> queue{Filter::top(L)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    const Filter f = queue.front();
    queue.pop_front();
    for (Elem x = 0; x < static_cast<Elem>(L.size()); ++x) {
      if (f.contains(x)) continue;
      ElementSet seed = f.members();
      seed.set(static_cast<std::size_t>(x));
      auto next = Filter::try_generated(L, seed);
      if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
    }
  }
  return {seen.begin(), seen.end()};
}

ElementSet generated_subalgebra(const CubicAlgebra& A, const Filter& f) {
  ElementSet out = A.empty_set();
  const auto members = f.elements();
  for (Elem x : members) {
    for (Elem y : members) {
      if (A.leq(y, x)) out.set(static_cast<std::size_t>(A.delta(x, y)));
    }
  }
  const auto closed = to_vector(out);
  for (Elem x : closed) {
    for (Elem y : closed) {
      if (!out.test(static_cast<std::size_t>(A.join(x, y)))) {
        throw Error(ErrorKind::Internal, "Delta-closure of a filter not closed under join");
      }
      if (A.leq(y, x) && !out.test(static_cast<std::size_t>(A.delta(x, y)))) {
        throw Error(ErrorKind::Internal, "Delta-closure of a filter not closed under Delta");
      }
    }
  }
  return out;
}

bool is_gfilter(const CubicAlgebra& A, const Filter& f) { return generated_subalgebra(A, f).all(); }

FilterLattice::FilterLattice(const Semilattice& L, std::size_t max_carrier)
    : algebra_(&L), filters_(enumerate_filters(L, max_carrier)) {}

Filter FilterLattice::impl_sup(const Filter& g, const Filter& f) const {
  require_subfilter(g, f);
  ElementSet acc = algebra_->full_set();
  bool any = false;
  for (const Filter& h : filters_) {
    const auto j = try_filter_join(h, g);
    if (j && *j == f) {
      acc &= h.members();
      any = true;
    }
  }
  if (!any) throw Error(ErrorKind::NoWitnessFilter, "no filter H with H v G = F");
  return Filter::make(*algebra_, std::move(acc));
}

Filter FilterLattice::impl_join(const Filter& g, const Filter& f) const {
  require_subfilter(g, f);
  Filter acc = Filter::top(*algebra_);
  for (const Filter& h : filters_) {
    if (h.subset_of(f) && (h.members() & g.members()).count() == 1) acc = filter_join(acc, h);
  }
  return acc;
}

Filter impl_elem(const Filter& g, const Filter& f) {
  require_subfilter(g, f);
  const Semilattice& L = f.algebra();
  ElementSet out = L.empty_set();
  const auto gs = g.elements();
  for (Elem h : f.elements()) {
    bool ok = true;
    for (Elem x : gs) {
      if (L.join(h, x) != L.one()) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(static_cast<std::size_t>(h));
  }
  return Filter::make(L, std::move(out));
}

bool is_F_boolean(const Filter& g, const Filter& f) { return filter_join(g, impl_elem(g, f)) == f; }

bool is_weakly_F_boolean(const Filter& g, const Filter& f) { return impl_elem(impl_elem(g, f), f) == g; }

bool is_boolean(const CubicAlgebra& A, const FilterLattice& lattice, const Filter& g) {
  bool any = false;
  for (const Filter& h : lattice.filters()) {
    if (!g.subset_of(h) || !is_gfilter(A, h)) continue;
    any = true;
    if (!is_F_boolean(g, h)) return false;
  }
  return any;
}

Filter delta_filter(const CubicAlgebra& A, const Filter& g, const Filter& f) {
  require_subfilter(g, f);
  ElementSet mirrored = A.empty_set();
  for (Elem h : impl_elem(g, f).elements()) mirrored.set(static_cast<std::size_t>(A.antipode(h)));
  return Filter::generated(A, mirrored | g.members());
}

Filter boolean_filter_sum(const Filter& g1, const Filter& g2) {
  require_same(g1, g2);
  const Filter c = Filter::whole(g1.algebra());
  if (!is_F_boolean(g1, c)) throw Error(ErrorKind::NotBoolean, "first summand is not Boolean in the ambient");
  if (!is_F_boolean(g2, c)) throw Error(ErrorKind::NotBoolean, "second summand is not Boolean in the ambient");
  return filter_join(filter_meet(impl_elem(g1, c), impl_elem(g2, c)), filter_meet(g1, g2));
}

}  // namespace mrkit
