#include "mrkit/claims.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mrkit/automorphism_search.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/error.hpp"
#include "mrkit/inner.hpp"
#include "mrkit/localization.hpp"
#include "mrkit/subalgebra.hpp"

namespace mrkit {
namespace {

using Elems = std::vector<Elem>;

std::size_t at(Elem x) { return static_cast<std::size_t>(x); }

Elems range(const Semilattice& A) {
  Elems out(A.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::string fail(const Semilattice& A, const std::string& what, const Elems& w = {}) {
  return w.empty() ? what : what + " at " + format_witness(A, w);
}

std::string show(const Filter& f) {
  const Semilattice& A = f.algebra();
  const auto mins = A.minimal_elements(f.members());
  if (mins.size() == 1) return "up(" + A.label(mins.front()) + ")";
  return format_witness(A, f.elements());
}

std::string show(const CubicAlgebra& A, const Permutation& p) { return "map " + format_witness(A, p); }

ElementSet image_of(const CubicAlgebra& A, const Permutation& p, const ElementSet& s) {
  ElementSet out = A.empty_set();
  for (Elem x : to_vector(s)) out.set(at(p[at(x)]));
  return out;
}

Permutation restrict_to(const Subalgebra& sub, const Permutation& p) {
  Permutation out;
  for (Elem x : sub.to_parent) out.push_back(sub.from_parent[at(p[at(x)])]);
  return out;
}

/// Least subset containing `seed` closed under join and Delta.
ElementSet subalgebra_closure(const CubicAlgebra& A, ElementSet s) {
  s.set(at(A.one()));
  for (bool grew = true; grew;) {
    grew = false;
    const Elems cur = to_vector(s);
    for (Elem x : cur) {
      for (Elem y : cur) {
        const Elem j = A.join(x, y);
        const Elem d = A.leq(y, x) ? A.delta(x, y) : j;
        for (Elem z : {j, d}) {
          if (!s.test(at(z))) {
            s.set(at(z));
            grew = true;
          }
        }
      }
    }
  }
  return s;
}

std::vector<Filter> boolean_filters(const Instance& in) {
  const Quotient& q = in.quotient();
  const Filter whole = Filter::whole(q.algebra);
  std::vector<Filter> out;
  for (const Filter& g : enumerate_filters(q.algebra))
    if (is_F_boolean(g, whole)) out.push_back(g);
  return out;
}

// ---- cubic core ----------------------------------------------------------

Witness cubic_axioms(const Instance& in) {
  const AxiomReport r = check_cubic_axioms(in.algebra());
  if (r.passed) return std::nullopt;
  return fail(in.algebra(), "axiom " + r.violations.front().axiom, r.violations.front().witness);
}

Witness cubic_is_implication(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem x : range(A)) {
    if (A.implies(x, x) != A.one()) return fail(A, "x -> x != 1", {x});
    for (Elem y : range(A)) {
      if (A.implies(A.implies(x, y), y) != A.join(x, y)) return fail(A, "(x -> y) -> y != x v y", {x, y});
      if (A.implies(A.implies(x, y), x) != x) return fail(A, "(x -> y) -> x != x", {x, y});
      if (A.leq(x, y) != (A.implies(x, y) == A.one())) return fail(A, "x <= y not equivalent to x -> y = 1", {x, y});
      for (Elem z : range(A))
        if (A.implies(x, A.implies(y, z)) != A.implies(y, A.implies(x, z))) return fail(A, "exchange", {x, y, z});
    }
  }
  return std::nullopt;
}

Witness caret_total_iff_mr(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  if (caret_total(A) == in.mr()) return std::nullopt;
  if (const auto f = first_caret_failure(A)) return fail(A, "MR holds but caret undefined", {f->first, f->second});
  return fail(A, "caret total but MR fails", check_mr_axiom(A).violations.front().witness);
}

Witness preceq_meet(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem a : range(A)) {
    for (Elem b : range(A)) {
      const auto m = A.meet(A.join(b, a), A.join(b, A.antipode(a)));
      if (A.preceq(a, b) != (m == std::optional<Elem>{b})) return fail(A, "preceq disagrees with the meet form", {a, b});
    }
  }
  return std::nullopt;
}

Witness preceq_with_meet(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem p : range(A))
    for (Elem q : range(A))
      if (A.preceq(p, q) && A.meet(p, q) && !A.leq(p, q)) return fail(A, "p preceq q with a meet but not p <= q", {p, q});
  return std::nullopt;
}

Witness sim_with_meet(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem p : range(A))
    for (Elem q : range(A))
      if (A.sim(p, q) && A.meet(p, q) && p != q) return fail(A, "distinct sim-related elements with a meet", {p, q});
  return std::nullopt;
}

Witness sim_congruence(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  for (Elem x : range(A)) {
    if (!A.sim(x, x)) return fail(A, "sim not reflexive", {x});
    for (Elem y : range(A)) {
      if (A.sim(x, y) != A.sim(y, x)) return fail(A, "sim not symmetric", {x, y});
      if (A.sim(x, y) != (q.eta(x) == q.eta(y))) return fail(A, "sim not transitive", {x, y});
    }
  }
  for (Elem x : range(A)) {
    for (Elem y : range(A)) {
      for (Elem x2 : q.classes[at(q.eta(x))]) {
        for (Elem y2 : q.classes[at(q.eta(y))]) {
          if (!A.sim(A.star(x, y), A.star(x2, y2))) return fail(A, "star does not respect sim", {x, y, x2, y2});
          const auto c = A.caret(x, y), c2 = A.caret(x2, y2);
          if (c && c2 && !A.sim(*c, *c2)) return fail(A, "caret does not respect sim", {x, y, x2, y2});
        }
      }
    }
  }
  return std::nullopt;
}

Witness localization_maps(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem a : range(A)) {
    const AxiomReport r = verify_localization(A, localize(A, a, false));
    if (!r.passed) return fail(A, r.violations.front().axiom + " at point " + A.label(a), r.violations.front().witness);
  }
  return std::nullopt;
}

Witness pair_mr_iff_lattice(const Instance& in) {
  if (in.mr() == in.pairs()->base.is_lattice()) return std::nullopt;
  return fail(in.algebra(), in.mr() ? "MR over a base without meets" : "MR fails over a lattice base");
}

Witness embedding_e(const Instance& in) {
  const PairAlgebra& pa = *in.pairs();
  const ImplicationAlgebra& I = pa.base;
  const CubicAlgebra& A = pa.algebra;
  for (Elem a : range(I)) {
    for (Elem b : range(I)) {
      const Elem ea = embed_e(pa, a), eb = embed_e(pa, b);
      if (embed_e(pa, I.join(a, b)) != A.join(ea, eb)) return fail(I, "e does not preserve join", {a, b});
      if (embed_e(pa, I.implies(a, b)) != A.implies(ea, eb)) return fail(I, "e does not preserve ->", {a, b});
      if (I.leq(a, b) != A.leq(ea, eb)) return fail(I, "e is not an order embedding", {a, b});
    }
  }
  for (const Permutation& f : enumerate_aut(I)) {
    const CubicHom If = functor_I_hom(pa, pa, {&I, &I, f});
    for (Elem a : range(I))
      if (embed_e(pa, f[at(a)]) != If(embed_e(pa, a))) return fail(I, "e not natural for " + show(A, If.map), {a});
  }
  return std::nullopt;
}

// ---- presentations and filters -------------------------------------------

Witness presentations(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Elems mins = A.minimal_elements();
  const std::size_t k = std::min<std::size_t>(mins.size(), 12);
  auto run = [&](const Elems& seq) -> Witness {
    if (!presentation_check(A, seq)) return std::nullopt;
    try {
      const Filter f = gfilter_from_presentation(A, seq, false);
      if (!is_gfilter(A, f)) return fail(A, "presentation output does not generate", seq);
    } catch (const Error& e) {
      return fail(A, std::string("presentation failed: ") + e.what(), seq);
    }
    return std::nullopt;
  };
  std::size_t presenting = 0;
  for (std::uint32_t bits = 1; bits < (1u << k); ++bits) {
    Elems seq;
    for (std::size_t i = 0; i < k; ++i)
      if (bits >> i & 1) seq.push_back(mins[i]);
    presenting += presentation_check(A, seq);
    if (auto w = run(seq)) return w;
  }
  if (presenting == 0) return fail(A, "no vertex set presents the algebra");
  for (Elem x : range(A)) {
    if (std::find(mins.begin(), mins.end(), x) != mins.end()) continue;
    Elems front{x};
    front.insert(front.end(), mins.begin(), mins.end());
    if (auto w = run(front)) return w;
    Elems back = mins;
    back.push_back(x);
    if (auto w = run(back)) return w;
  }
  return std::nullopt;
}

Witness generated_equals_hat(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.filters().filters()) {
    try {
      if (generated_subalgebra(A, f) != subalgebra_closure(A, f.members()))
        return "hat set differs from the generated subalgebra for " + show(f);
    } catch (const Error& e) {
      return "hat set of " + show(f) + ": " + e.what();
    }
  }
  return std::nullopt;
}

Witness beta_isomorphism(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.gfilters()) {
      std::map<Elem, Elem> beta;
      for (Elem x : f.elements()) beta[x] = alpha_beta(A, g, x).second;
      std::set<Elem> image;
      for (const auto& [x, b] : beta) {
        if (!g.contains(b)) return fail(A, "beta leaves " + show(g), {x});
        image.insert(b);
      }
      if (image.size() != g.size()) return "beta from " + show(f) + " onto " + show(g) + " is not a bijection";
      for (Elem x : f.elements()) {
        for (Elem y : f.elements()) {
          if (beta[A.join(x, y)] != A.join(beta[x], beta[y])) return fail(A, "beta does not preserve join", {x, y});
          if (beta[A.implies(x, y)] != A.implies(beta[x], beta[y])) return fail(A, "beta does not preserve ->", {x, y});
        }
      }
    }
  }
  return std::nullopt;
}

Witness unique_filter_automorphism(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.gfilters()) {
      const Permutation phi = filter_automorphism(A, f, g);
      std::size_t count = 0;
      for (const Permutation& s : in.aut()) {
        if (image_of(A, s, f.members()) != g.members()) continue;
        bool sim = true;
        for (Elem x : f.elements()) sim = sim && A.sim(x, s[at(x)]);
        if (!sim) continue;
        ++count;
        if (s != phi) return "second filter automorphism from " + show(f) + " to " + show(g) + ": " + show(A, s);
      }
      if (count != 1) return "no filter automorphism from " + show(f) + " to " + show(g);
    }
  }
  return std::nullopt;
}

Witness inner_is_filter_automorphism(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    for (const Filter& f : in.gfilters()) {
      const ElementSet img = image_of(A, phi, f.members());
      if (!filter_defect(A, img).empty()) return "image of " + show(f) + " is not a filter under " + show(A, phi);
      const Filter g = Filter::make(A, img);
      if (!is_gfilter(A, g)) return "image of " + show(f) + " does not generate under " + show(A, phi);
      if (filter_automorphism(A, f, g) != phi) return show(A, phi) + " differs from the filter automorphism of " + show(f);
    }
  }
  return std::nullopt;
}

Witness filter_automorphism_involution(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Permutation id = identity_permutation(A.size());
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.gfilters()) {
      const Permutation phi = filter_automorphism(A, f, g);
      if (phi != filter_automorphism(A, g, f)) return "filter automorphism not symmetric for " + show(f) + ", " + show(g);
      if (compose(phi, phi) != id) return "filter automorphism not an involution for " + show(f) + ", " + show(g);
    }
  }
  return std::nullopt;
}

Witness filter_implications_agree(const Instance& in) {
  const FilterLattice& fl = in.filters();
  for (const Filter& f : fl.filters()) {
    for (const Filter& g : fl.filters()) {
      if (!g.subset_of(f)) continue;
      try {
        const Filter e = impl_elem(g, f);
        if (fl.impl_join(g, f) != e) return "G => F differs from G -> F for G=" + show(g) + ", F=" + show(f);
        if (fl.impl_sup(g, f) != e) return "G sup F differs from G -> F for G=" + show(g) + ", F=" + show(f);
      } catch (const Error& e) {
        return "G=" + show(g) + ", F=" + show(f) + ": " + e.what();
      }
    }
  }
  return std::nullopt;
}

Witness boolean_everywhere(const Instance& in) {
  for (const Filter& g : in.filters().filters()) {
    bool some = false, all = true;
    for (const Filter& h : in.gfilters()) {
      if (!g.subset_of(h)) continue;
      const bool b = is_F_boolean(g, h);
      some = some || b;
      all = all && b;
    }
    if (some && !all) return show(g) + " is Boolean in one g-filter but not in another";
  }
  return std::nullopt;
}

Witness gfilter_round_trips(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& h : in.gfilters()) {
      const Filter g = filter_meet(f, h);
      if (!is_F_boolean(g, f)) return "F meet H not F-Boolean for F=" + show(f) + ", H=" + show(h);
      if (delta_filter(A, g, f) != h) return "Delta(F meet H, F) != H for F=" + show(f) + ", H=" + show(h);
    }
    for (const Filter& g : in.filters().filters()) {
      if (!g.subset_of(f) || !is_F_boolean(g, f)) continue;
      const Filter h = delta_filter(A, g, f);
      if (!is_gfilter(A, h)) return "Delta(G, F) not generating for G=" + show(g) + ", F=" + show(f);
      if (filter_meet(f, h) != g) return "F meet Delta(G, F) != G for G=" + show(g) + ", F=" + show(f);
    }
  }
  return std::nullopt;
}

Witness local_boolean(const Instance& in) {
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.filters().filters()) {
      if (!g.subset_of(f) || !is_F_boolean(g, f)) continue;
      for (const Filter& h : in.filters().filters()) {
        if (h.subset_of(f) && !is_F_boolean(filter_meet(g, h), h))
          return "G meet H not H-Boolean for G=" + show(g) + ", H=" + show(h);
      }
    }
  }
  return std::nullopt;
}

Witness local_principal(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.filters().filters()) {
      if (!g.subset_of(f) || !is_F_boolean(g, f)) continue;
      for (Elem x : f.elements()) {
        const ElementSet cut = g.members() & A.up_set(x);
        const Elems mins = A.minimal_elements(cut);
        if (mins.size() != 1 || A.up_set(mins.front()) != cut)
          return fail(A, "G meet [f,1] not principal for G=" + show(g), {x});
      }
    }
  }
  return std::nullopt;
}

// ---- functors ------------------------------------------------------------

Witness hom_preserves_sim(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& s : in.aut())
    for (Elem a : range(A))
      for (Elem b : range(A))
        if (A.sim(a, b) && !A.sim(s[at(a)], s[at(b)])) return fail(A, "sim not preserved by " + show(A, s), {a, b});
  return std::nullopt;
}

Witness iota_isomorphism(const Instance& in) {
  const PairAlgebra& pa = *in.pairs();
  const ImplicationHom io = iota(pa, in.quotient());
  if (!is_isomorphism(io)) return "iota is not an implication isomorphism";
  const ImplicationHom back = iota_inverse(pa, in.quotient());
  for (Elem a : range(pa.base))
    if (back(io(a)) != a) return fail(pa.base, "[<a,b>] -> a meet b does not invert iota", {a});
  return std::nullopt;
}

Witness eta_natural(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  for (const Permutation& s : in.aut()) {
    const ImplicationHom Cs = functor_C_hom(q, q, {&A, &A, s});
    if (!check_implication_hom(Cs).passed) return "C of " + show(A, s) + " is not an implication homomorphism";
    for (Elem x : range(A))
      if (q.eta(s[at(x)]) != Cs(q.eta(x))) return fail(A, "eta square fails for " + show(A, s), {x});
  }
  return std::nullopt;
}

Witness kappa_collapse(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  const PairAlgebra icq = build_I(q.algebra);
  const KappaMap k = kappa(q, icq);
  const Quotient qq = quotient_C(icq.algebra);
  const ImplicationHom Ck = functor_C_hom(q, qq, {&A, &icq.algebra, k.map});
  if (Ck.map != iota(icq, qq).map) return "C(kappa) differs from iota of the quotient";
  if (in.mr() && !check_mr_axiom(icq.algebra).passed) return "I(C(M)) fails MR over an MR algebra";
  return std::nullopt;
}

Witness kernel_is_filter_automorphisms(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  const Permutation qid = identity_permutation(q.algebra.size());
  std::set<Permutation> kernel, generated;
  for (const Permutation& s : in.aut())
    if (functor_C_hom(q, q, {&A, &A, s}).map == qid) kernel.insert(s);
  for (const Filter& f : in.gfilters())
    for (const Filter& g : in.gfilters()) generated.insert(filter_automorphism(A, f, g));
  if (kernel != generated) return "kernel of C has " + std::to_string(kernel.size()) + " elements, filter automorphisms " +
                                 std::to_string(generated.size());
  return std::nullopt;
}

Witness inner_normal_subgroup(const Instance& in) {
  const InnerGroupReport r = inner_group(in.algebra(), in.aut());
  if (!r.subgroup) return "inner automorphisms not closed under composition";
  if (!r.normal) return "inner automorphisms not normal";
  if (!r.kernel_agrees) return "inner automorphisms differ from the kernel of C";
  return std::nullopt;
}

Witness inner_two_torsion(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Permutation id = identity_permutation(A.size());
  for (const Permutation& s : in.inner())
    if (compose(s, s) != id) return show(A, s) + " does not square to the identity";
  return std::nullopt;
}

Witness presentation_on_filter(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    const FilterFrame frame(A, f);
    if (!is_isomorphism(frame.presentation())) return "F-presentation not an isomorphism for " + show(f);
    for (Elem x : f.elements())
      if (frame.presentation()(x) != embed_e(frame.pairs(), *frame.base_index(x)))
        return fail(A, "F-presentation differs from e on " + show(f), {x});
  }
  return std::nullopt;
}

Witness xi_isomorphism(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const auto caut = enumerate_aut(in.quotient().algebra);
  for (const Filter& f : in.gfilters()) {
    const FilterFrame frame(A, f);
    const auto faut = enumerate_aut(frame.base());
    std::set<Permutation> images;
    for (const Permutation& a : caut) {
      images.insert(frame.xi(a));
      for (const Permutation& b : caut)
        if (frame.xi(compose(a, b)) != compose(frame.xi(a), frame.xi(b))) return "Xi not multiplicative on " + show(f);
    }
    if (images != std::set<Permutation>(faut.begin(), faut.end())) return "Xi not onto Aut(F) for " + show(f);
  }
  return std::nullopt;
}

Witness factoring(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    const FilterFrame frame(A, f);
    for (const Permutation& phi : in.aut()) {
      const auto fac = frame.factor(phi);
      if (fac.g.members() != image_of(A, phi, f.members())) return "G is not the image of " + show(f);
      const Permutation rebuilt = compose(filter_automorphism(A, f, fac.g), frame.extend(fac.chi));
      if (!fac.reconstructs || rebuilt != phi) return show(A, phi) + " not rebuilt from " + show(f);
    }
  }
  return std::nullopt;
}

Witness fixed_is_generated(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.gfilters()) {
      const Permutation phi = filter_automorphism(A, f, g);
      if (fixed_set(A, phi) != generated_subalgebra(A, filter_meet(f, g)))
        return "fixed set differs from the generated subalgebra for " + show(f) + ", " + show(g);
    }
  }
  return std::nullopt;
}

Witness antifixed_is_generated(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Filter& f : in.gfilters()) {
    for (const Filter& g : in.gfilters()) {
      const Permutation phi = filter_automorphism(A, f, g);
      const Filter rel = impl_elem(filter_meet(f, g), f);
      ElementSet flipped = A.empty_set(), mirrored = A.empty_set();
      for (Elem x : range(A))
        if (phi[at(x)] == A.antipode(x)) flipped.set(at(x));
      for (Elem x : g.elements()) mirrored.set(at(A.antipode(x)));
      if (flipped != generated_subalgebra(A, rel))
        return "antifixed set differs from the generated subalgebra for " + show(f) + ", " + show(g);
      if ((mirrored & f.members()) != rel.members())
        return "Delta(1, G) meet F differs from (F meet G) -> F for " + show(f) + ", " + show(g);
    }
  }
  return std::nullopt;
}

Witness inclusion_classes(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const ElementSet& m : in.upward_closed())
    if (!inclusion_collapse(A, in.quotient(), m)) return "classes change inside " + format_witness(A, to_vector(m));
  return std::nullopt;
}

Witness restriction_commutes(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  std::vector<ImplicationHom> cphi;
  for (const Permutation& s : in.aut()) cphi.push_back(functor_C_hom(q, q, {&A, &A, s}));
  for (const ElementSet& m : in.upward_closed()) {
    const Subalgebra sub = induced_subalgebra(A, m);
    const Quotient qm = quotient_C(sub.algebra);
    for (std::size_t i = 0; i < in.aut().size(); ++i) {
      const Permutation& s = in.aut()[i];
      if (image_of(A, s, m) != m) continue;
      const ImplicationHom cr = functor_C_hom(qm, qm, {&sub.algebra, &sub.algebra, restrict_to(sub, s)});
      for (Elem x : range(sub.algebra)) {
        const Elem rep = qm.classes[at(cr(qm.eta(x)))].front();
        if (q.eta(sub.to_parent[at(rep)]) != cphi[i](q.eta(sub.to_parent[at(x)])))
          return fail(A, "restriction square fails for " + show(A, s), {sub.to_parent[at(x)]});
      }
    }
  }
  return std::nullopt;
}

Witness collapse_determines(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  std::map<ElementSet, ElementSet> seen;
  for (const ElementSet& m : in.upward_closed()) {
    const auto [it, fresh] = seen.emplace(in.quotient().image(m), m);
    if (!fresh) return "two upward-closed subalgebras collapse alike: " + format_witness(A, to_vector(it->second)) +
                       " and " + format_witness(A, to_vector(m));
  }
  return std::nullopt;
}

Witness closure_properties(const CubicAlgebra& A, const Elems& points, const std::vector<Permutation>& gens,
                           std::map<ElementSet, bool>& mr_cache) {
  const ElementSet l = localize_closure(A, points, gens);
  for (Elem x : points)
    if (!l.test(at(x))) return fail(A, "closure misses a point", points);
  if (!is_upward_closed(A, l) || !is_subalgebra(A, l)) return fail(A, "closure not an upward-closed subalgebra", points);
  const Subalgebra sub = induced_subalgebra(A, l);
  auto it = mr_cache.find(l);
  if (it == mr_cache.end()) it = mr_cache.emplace(l, check_mr_axiom(sub.algebra).passed).first;
  if (!it->second) return fail(A, "closure fails MR", points);
  for (const Permutation& s : gens) {
    const Permutation r = restrict_to(sub, s);
    if (std::count(r.begin(), r.end(), kUndefined) || !is_automorphism(sub.algebra, r))
      return fail(A, "restriction of " + show(A, s) + " not an automorphism", points);
  }
  return std::nullopt;
}

Witness localization_closure(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  std::map<ElementSet, bool> cache;
  for (Elem x : range(A)) {
    if (auto w = closure_properties(A, {x}, {}, cache)) return w;
    for (const Permutation& s : in.aut())
      if (auto w = closure_properties(A, {x}, {s}, cache)) return w;
  }
  return std::nullopt;
}

Witness localization_closure_sets(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const auto& aut = in.aut();
  std::map<ElementSet, bool> cache;
  for (Elem x : range(A)) {
    const std::size_t i = at(x) % aut.size();
    const Elems points{x, A.antipode(x)};
    if (auto w = closure_properties(A, points, {aut[i], aut[(i + 1) % aut.size()]}, cache)) return w;
  }
  return std::nullopt;
}

// ---- inner automorphisms -------------------------------------------------

Witness fixed_upward_mr(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    const ElementSet m = fixed_set(A, phi);
    if (!is_upward_closed(A, m) || !is_subalgebra(A, m)) return "fixed set not an upward-closed subalgebra for " + show(A, phi);
    if (!check_mr_axiom(induced_subalgebra(A, m).algebra).passed) return "fixed set fails MR for " + show(A, phi);
  }
  return std::nullopt;
}

Witness fixed_set_determines(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  std::map<ElementSet, Permutation> seen;
  for (const Permutation& phi : in.inner()) {
    const auto [it, fresh] = seen.emplace(fixed_set(A, phi), phi);
    if (!fresh) return "same fixed set for " + show(A, it->second) + " and " + show(A, phi);
  }
  return std::nullopt;
}

Witness inner_identities(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    for (Elem x : range(A)) {
      const Elem px = phi[at(x)], nx = A.antipode(x), npx = A.antipode(px);
      if (A.meet(A.join(x, px), A.join(x, npx)) != std::optional<Elem>{x}) return fail(A, "x not recovered", {x});
      if (A.meet(A.join(x, px), A.join(nx, px)) != std::optional<Elem>{px}) return fail(A, "phi(x) not recovered", {x});
      if (A.join(nx, px) != A.antipode(A.join(x, npx))) return fail(A, "mirror identity fails", {x});
    }
  }
  return std::nullopt;
}

Witness joins_land_in_halves(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    const ElementSet m = fixed_set(A, phi), d = d_set(A, in.quotient(), phi);
    for (Elem x : range(A)) {
      if (!m.test(at(A.join(x, phi[at(x)])))) return fail(A, "x v phi(x) not fixed", {x});
      if (!d.test(at(A.join(x, A.antipode(phi[at(x)]))))) return fail(A, "x v Delta(1, phi(x)) outside D", {x});
    }
  }
  return std::nullopt;
}

Witness mirrored_join_in_d(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    const ElementSet d = d_set(A, in.quotient(), phi);
    for (Elem x : range(A))
      if (!d.test(at(A.join(A.antipode(x), phi[at(x)])))) return fail(A, "Delta(1, x) v phi(x) outside D", {x});
  }
  return std::nullopt;
}

Witness d_flipped(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner())
    for (Elem z : to_vector(d_set(A, in.quotient(), phi)))
      if (phi[at(z)] != A.antipode(z)) return fail(A, "phi(z) != Delta(1, z) on D for " + show(A, phi), {z});
  return std::nullopt;
}

Witness halves_meet_in_one(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner())
    if ((fixed_set(A, phi) & d_set(A, in.quotient(), phi)) != make_set(A.size(), {A.one()}))
      return "M and D share more than 1 for " + show(A, phi);
  return std::nullopt;
}

Witness halves_have_meets(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    const ElementSet d = d_set(A, in.quotient(), phi);
    for (Elem x : to_vector(fixed_set(A, phi)))
      for (Elem y : to_vector(d))
        if (!A.meet(x, A.antipode(y))) return fail(A, "x meet Delta(1, y) missing", {x, y});
  }
  return std::nullopt;
}

Witness unique_split(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner()) {
    const Elems m = to_vector(fixed_set(A, phi)), d = to_vector(d_set(A, in.quotient(), phi));
    for (Elem z : range(A)) {
      std::size_t splits = 0;
      for (Elem a : m)
        for (Elem b : d) splits += A.meet(a, b) == std::optional<Elem>{z};
      if (splits != 1) return fail(A, std::to_string(splits) + " splits over M x D", {z});
      const auto [z0, z1] = decompose(A, phi, z);
      if (A.meet(z0, z1) != std::optional<Elem>{z}) return fail(A, "decomposition does not meet to z", {z});
    }
  }
  return std::nullopt;
}

Witness split_recovers(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (const Permutation& phi : in.inner())
    for (Elem z : range(A))
      if (recover(A, phi, z) != phi[at(z)]) return fail(A, "z0 meet Delta(1, z1) != phi(z)", {z});
  return std::nullopt;
}

Witness omega_boolean(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Filter whole = Filter::whole(in.quotient().algebra);
  for (const Permutation& phi : in.inner())
    if (!is_F_boolean(omega(A, in.quotient(), phi), whole)) return "C(M_phi) not Boolean for " + show(A, phi);
  return std::nullopt;
}

Witness interval_decomposition(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem a : range(A)) {
    const Subalgebra sub = induced_subalgebra(A, localize(A, a, false).members);
    const CubicAlgebra& L = sub.algebra;
    const Elem la = sub.from_parent[at(a)];
    for (Elem g : range(L)) {
      if (!L.leq(la, g)) continue;
      for (Elem z : range(L))
        if (int_comp(L, la, g, z) != std::optional<Elem>{z})
          return fail(A, "interval decomposition fails at point " + A.label(a),
                      {sub.to_parent[at(g)], sub.to_parent[at(z)]});
    }
  }
  return std::nullopt;
}

Witness recovery_from_filter(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  const Filter whole = Filter::whole(q.algebra);
  for (const Filter& g : boolean_filters(in)) {
    const ElementSet s1 = q.preimage(g.members()), s2 = q.preimage(impl_elem(g, whole).members());
    if ((s1 & s2) != make_set(A.size(), {A.one()})) return "S1 and S2 share more than 1 for " + show(g);
    for (Elem x : range(A)) {
      std::size_t splits = 0;
      for (Elem a : to_vector(s1))
        for (Elem b : to_vector(s2)) splits += A.meet(a, b) == std::optional<Elem>{x};
      if (splits != 1) return fail(A, std::to_string(splits) + " splits over S1 x S2 for " + show(g), {x});
    }
    Permutation phi;
    try {
      phi = phi_from_boolean_filter(A, q, g);
    } catch (const Error& e) {
      return "phi_G for " + show(g) + ": " + e.what();
    }
    if (!is_automorphism(A, phi)) return "phi_G not an automorphism for " + show(g);
    if (!is_inner(A, phi)) return "phi_G not inner for " + show(g);
    if (fixed_set(A, phi) != s1) return "phi_G does not fix exactly S1 for " + show(g);
  }
  return std::nullopt;
}

Witness local_translations(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  for (Elem a : range(A)) {
    const Subalgebra sub = induced_subalgebra(A, localize(A, a, false).members);
    const CubicAlgebra& L = sub.algebra;
    const Elem la = sub.from_parent[at(a)];
    for (Elem g : range(L)) {
      if (!L.leq(la, g)) continue;
      const Elem b = L.delta(g, la);
      const Permutation fh = f_hat_ab(L, la, b), pg = phi_g(L, la, g);
      const Elems w{sub.to_parent[at(la)], sub.to_parent[at(g)]};
      if (!is_automorphism(L, fh) || !is_inner(L, fh)) return fail(A, "extension not an inner automorphism", w);
      for (Elem z : range(L)) {
        if (L.join(fh[at(z)], b) != L.join(pg[at(z)], b)) return fail(A, "first join identity fails", w);
        if (L.join(fh[at(z)], L.antipode(b)) != L.join(pg[at(z)], L.antipode(b)))
          return fail(A, "second join identity fails", w);
      }
      if (fh != pg) return fail(A, "extension differs from phi_g", w);
    }
  }
  return std::nullopt;
}

Witness omega_isomorphism(const Instance& in) {
  const CubicAlgebra& A = in.algebra();
  const Quotient& q = in.quotient();
  const auto& inner = in.inner();
  const auto targets = boolean_filters(in);
  std::set<ElementSet> image;
  for (const Permutation& phi : inner) {
    const Filter o = omega(A, q, phi);
    image.insert(o.members());
    if (phi_from_boolean_filter(A, q, o) != phi) return "phi_G of Omega(phi) != phi for " + show(A, phi);
    for (const Permutation& psi : inner)
      if (omega(A, q, compose(phi, psi)) != boolean_filter_sum(o, omega(A, q, psi)))
        return "Omega not multiplicative at " + show(A, phi) + ", " + show(A, psi);
  }
  std::set<ElementSet> expected;
  for (const Filter& g : targets) {
    expected.insert(g.members());
    if (omega(A, q, phi_from_boolean_filter(A, q, g)) != g) return "Omega(phi_G) != G for " + show(g);
  }
  if (image.size() != inner.size()) return "Omega not injective";
  if (image != expected) return "Omega not onto the Boolean filters";
  const PairAlgebra icm = build_I(q.algebra);
  if (inner_group(icm.algebra, enumerate_aut(icm.algebra)).inner.size() != inner.size())
    return "Inn(M) and Inn(I(C(M))) differ in size";
  return std::nullopt;
}

std::vector<Claim> make_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::string statement, bool mr, bool pairs, std::function<Witness(const Instance&)> f) {
    r.push_back({std::move(id), std::move(statement), mr, pairs, std::move(f)});
  };
  add("def:cubic", "cubic axioms a-f hold", false, false, cubic_axioms);
  add("lem:cubicImplication", "the derived -> satisfies the implication algebra laws", false, false, cubic_is_implication);
  add("lem:caretTotal", "MR holds iff caret is total", false, false, caret_total_iff_mr);
  add("lem:preceqMeet", "a preceq b iff b = (b v a) meet (b v Delta(1,a))", false, false, preceq_meet);
  add("prop:triv", "p preceq q with p meet q existing gives p <= q", false, false, preceq_with_meet);
  add("cor:triv", "p sim q with p meet q existing gives p = q", false, false, sim_with_meet);
  add("rem:simCongruence", "sim is an equivalence respecting caret and star", false, false, sim_congruence);
  add("lem:kl", "localization coordinate maps k, l have properties a-e at every point", false, false,
      localization_maps);
  add("rem:pairMR", "I(I) is MR iff I has all meets of pairs", false, true, pair_mr_iff_lattice);
  add("nat:e", "e is an implication embedding natural in base automorphisms", false, true, embedding_e);
  add("thm:present", "caret chains of presentations generate g-filters", true, false, presentations);
  add("lem:gen", "the generated subalgebra of a filter is its Delta-set", false, false, generated_equals_hat);
  add("cor:filterAuts", "beta_G restricted to F is an implication isomorphism onto G", true, false, beta_isomorphism);
  add("lem:uniqueness", "exactly one filter automorphism carries F onto G", true, false, unique_filter_automorphism);
  add("lem:anyFilter", "an inner automorphism is the filter automorphism from F to its image", true, false,
      inner_is_filter_automorphism);
  add("lem:inverses", "filter automorphisms are symmetric in F, G and involutive", true, false,
      filter_automorphism_involution);
  add("lem:twoThreeSame", "the three filter implications coincide", false, false, filter_implications_agree);
  add("thm:Boolean", "F-Boolean for one g-filter means Boolean for all containing g-filters", true, false,
      boolean_everywhere);
  add("thm:lots", "g-filters correspond to F-Boolean subfilters through Delta", true, false, gfilter_round_trips);
  add("lem:localBoolean", "G F-Boolean and H inside F gives G meet H H-Boolean", true, false, local_boolean);
  add("lem:localPrincBool", "G F-Boolean gives G meet [f,1] principal", true, false, local_principal);
  add("lem:simHom", "automorphisms preserve sim", false, false, hom_preserves_sim);
  add("thm:isoIota", "iota is an implication isomorphism with inverse [<a,b>] -> a meet b", false, true,
      iota_isomorphism);
  add("nat:eta", "eta commutes with every automorphism and its image under C", false, false, eta_natural);
  add("rem:kappa", "C(kappa) equals iota of the quotient", false, false, kappa_collapse);
  add("thm:kerFilter", "the kernel of C is the set of filter automorphisms", true, false,
      kernel_is_filter_automorphisms);
  add("def:innerAut", "inner automorphisms form a normal subgroup equal to the kernel of C", true, false,
      inner_normal_subgroup);
  add("thm:TwoTorsion", "inner automorphisms square to the identity", true, false, inner_two_torsion);
  add("lem:phiE", "the F-presentation is an isomorphism agreeing with e on F", true, false, presentation_on_filter);
  add("def:Xi", "Xi is a group isomorphism Aut(C(M)) -> Aut(F)", true, false, xi_isomorphism);
  add("thm:factoring", "every automorphism is a filter automorphism after the extension of Xi C(phi)", true, false,
      factoring);
  add("lem:fixed", "the fixed set of phi<F,G> is generated by F meet G", true, false, fixed_is_generated);
  add("lem:DeltaFixed", "the antifixed set of phi<F,G> is generated by (F meet G) -> F", true, false,
      antifixed_is_generated);
  add("thm:incl", "classes of an upward-closed subalgebra are ambient classes", false, false, inclusion_classes);
  add("cor:restrict", "C of a restriction is the restriction of C", false, false, restriction_commutes);
  add("lem:collapseDewt", "upward-closed subalgebras are determined by their collapse", false, false,
      collapse_determines);
  add("thm:localization", "localization closure is upward-closed, MR, contains X and is invariant", true, false,
      localization_closure);
  add("cor:local", "localization closure under several automorphisms keeps them", true, false,
      localization_closure_sets);
  add("lem:upper", "the fixed set of an inner automorphism is an upward-closed MR-subalgebra", true, false,
      fixed_upward_mr);
  add("thm:MPhiIsGood", "inner automorphisms are determined by their fixed sets", true, false, fixed_set_determines);
  add("eq:oneA", "x, phi(x) and the mirror identity follow from x sim phi(x)", true, false, inner_identities);
  add("rem:joinFixed", "x v phi(x) lies in M and x v Delta(1,phi(x)) lies in D", true, false, joins_land_in_halves);
  add("lem:somethingIn", "Delta(1,x) v phi(x) lies in D", true, false, mirrored_join_in_d);
  add("lem:DeltaOne", "phi is Delta(1,-) on D", true, false, d_flipped);
  add("cor:intersect", "M and D meet only in 1", true, false, halves_meet_in_one);
  add("cor:metsExist", "x in M and y in D have x meet Delta(1,y)", true, false, halves_have_meets);
  add("lem:repsMD", "every z splits uniquely as z0 meet z1 over M x D", true, false, unique_split);
  add("lem:gotIt", "phi(z) = z0 meet Delta(1,z1)", true, false, split_recovers);
  add("lem:BoolCC", "C(M_phi) is C(M)-Boolean", true, false, omega_boolean);
  add("lem:intComp", "z = (z v Delta(g v z, g)) meet (z v Delta(h v z, h)) in every localization", true, false,
      interval_decomposition);
  add("thm:recoveryII", "a Boolean filter of C(M) splits M and defines an inner automorphism fixing S1", true, false,
      recovery_from_filter);
  add("eq:oneAA", "the local extension of f_ab equals phi_g", true, false, local_translations);
  add("thm:isoGroups", "Omega is a group isomorphism onto the Boolean filters of C(M)", true, false,
      omega_isomorphism);
  return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace mrkit
