// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
// Every comparison is exact (integer counts, element identities, set
// equality); the only numeric tolerances are the wall-clock budgets below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mrkit/automorphism_search.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/claims.hpp"
#include "mrkit/corpus.hpp"
#include "mrkit/error.hpp"
#include "mrkit/inner.hpp"
#include "mrkit/localization.hpp"
#include "mrkit/subalgebra.hpp"
#include "oracle.hpp"

using namespace mrkit;

namespace {

constexpr double kGroupBudgetSeconds = 60.0;  // criterion 3, n = 3
constexpr double kSuiteBudgetSeconds = 120.0;
constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kFilterPairs = 128;     // criterion 7, at least 100
constexpr std::size_t kSeededAlgebras = 5;    // criterion 8
constexpr std::size_t kClosureInstances = 10; // criterion 10

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// First failure wins; later checks are skipped once one has failed.
class Verdict {
 public:
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

  void require(bool cond, const std::string& what) {
    if (ok() && !cond) failure_ = what;
  }
  void claim(const std::string& id, const Instance& in) {
    if (!ok()) return;
    const Claim* c = find_claim(id);
    if (c == nullptr) {
      failure_ = "unknown claim " + id;
      return;
    }
    if (c->needs_mr && !in.mr()) {
      failure_ = id + " on " + in.name() + ": MR axiom fails";
      return;
    }
    if (c->needs_pairs && in.pairs() == nullptr) {
      failure_ = id + " on " + in.name() + ": not a pair algebra";
      return;
    }
    try {
      if (const Witness w = c->check(in)) failure_ = id + " on " + in.name() + ": " + *w;
    } catch (const Error& e) {
      failure_ = id + " on " + in.name() + ": " + e.what();
    }
  }

 private:
  std::string failure_;
};

std::size_t at(Elem x) { return static_cast<std::size_t>(x); }

std::vector<Elem> range(const Semilattice& A) {
  std::vector<Elem> out(A.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

struct Corpus {
  std::vector<Instance> all = build_corpus(kSeed);

  const Instance& get(const std::string& name) const {
    for (const Instance& in : all)
      if (in.name() == name) return in;
    throw Error(ErrorKind::Usage, "no corpus instance " + name);
  }
  std::vector<const Instance*> named(std::initializer_list<const char*> names) const {
    std::vector<const Instance*> out;
    for (const char* n : names) out.push_back(&get(n));
    return out;
  }
};

const char* const kFilterA = "I([r,1]<=B3)";
const char* const kFilterB = "I([pq,1]<=B3)";

bool is_filter_instance(const Instance& in) { return in.name() == kFilterA || in.name() == kFilterB; }

// ---- criteria ------------------------------------------------------------

Verdict axioms(const Corpus& corpus) {
  Verdict v;
  for (const Instance& in : corpus.all) {
    const bool expected_mr = in.name()[0] == 'C' || is_filter_instance(in);
    if (expected_mr || in.name() == "N5") v.require(check_cubic_axioms(in.algebra()).passed, in.name() + " fails the cubic axioms");
    if (expected_mr) v.require(check_mr_axiom(in.algebra()).passed, in.name() + " fails MR");
    v.require(caret_total(in.algebra()) == in.mr(), in.name() + ": caret totality disagrees with MR");
  }
  const PairAlgebra& n5 = fixtures::n5();
  const CubicAlgebra& A = n5.algebra;
  const Elem ea = embed_e(n5, *fixtures::i3().index_of(0b01));
  const Elem eb = embed_e(n5, *fixtures::i3().index_of(0b10));
  const AxiomReport mr = check_mr_axiom(A, WitnessPolicy::All);
  const bool named = std::any_of(mr.violations.begin(), mr.violations.end(), [&](const Violation& w) {
    return w.witness.size() == 3 && w.witness[1] == ea && w.witness[2] == eb;
  });
  v.require(!mr.passed && named, "N5 MR failure does not name (<1,p>, <1,q>)");
  v.require(!A.caret(ea, eb).has_value(), "caret defined at (<1,p>, <1,q>) in N5");
  return v;
}

Verdict counting() {
  Verdict v;
  std::size_t expected = 1;
  for (unsigned n = 1; n <= 4; ++n) {
    expected *= 3;
    const std::string tag = "n=" + std::to_string(n);
    const PairAlgebra pa = build_I(as_implication_algebra(BooleanAlgebra(n)).algebra);
    const oracle::Cube cube{n};
    std::set<std::string> want, got;
    for (const oracle::Pair& p : cube.carrier()) want.insert(cube.label(p));
    for (Elem x : range(pa.algebra)) got.insert(pa.algebra.label(x));
    v.require(pa.algebra.size() == expected && want.size() == expected, tag + ": |I(B)| != 3^n");
    v.require(got == want, tag + ": pair labels differ from the mask oracle");

    const FacePoset faces = face_poset(n);
    const CubicAlgebra& F = faces.algebra;
    const CubicAlgebra& I = pa.algebra;
    const std::vector<Elem> m = face_to_interval(faces, pa);
    v.require(F.size() == expected, tag + ": face count != 3^n");
    v.require(std::set<Elem>(m.begin(), m.end()).size() == expected, tag + ": face map not bijective");
    for (Elem x : range(F)) {
      for (Elem y : range(F)) {
        v.require(F.leq(x, y) == I.leq(m[at(x)], m[at(y)]), tag + ": face map does not reflect order");
        v.require(m[at(F.join(x, y))] == I.join(m[at(x)], m[at(y)]), tag + ": face map does not preserve join");
        if (F.leq(y, x))
          v.require(m[at(F.delta(x, y))] == I.delta(m[at(x)], m[at(y)]), tag + ": face map does not preserve Delta");
      }
    }
  }
  return v;
}

Verdict groups() {
  Verdict v;
  for (unsigned n = 1; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const auto t0 = Clock::now();
    const CubicAlgebra& A = fixtures::cube(n).algebra;
    const auto aut = enumerate_aut(A);
    const InnerGroupReport r = inner_group(A, aut);
    const double elapsed = seconds_since(t0);
    v.require(aut.size() == (std::size_t{1} << n) * factorial(n), tag + ": |Aut| = " + std::to_string(aut.size()));
    v.require(r.inner.size() == (std::size_t{1} << n), tag + ": |Inn| = " + std::to_string(r.inner.size()));
    v.require(r.subgroup && r.normal && r.abelian && r.two_torsion, tag + ": Inn not an abelian normal 2-torsion subgroup");
    const Permutation id = identity_permutation(A.size());
    for (const Permutation& p : r.inner) v.require(compose(p, p) == id, tag + ": inner element of order > 2");
    for (const Permutation& p : r.inner)
      for (const Permutation& q : r.inner) v.require(compose(p, q) == compose(q, p), tag + ": inner elements do not commute");
    if (n == 3) v.require(elapsed < kGroupBudgetSeconds, tag + ": took " + std::to_string(elapsed) + " s");
  }
  return v;
}

Verdict kernel(const Corpus& corpus) {
  Verdict v;
  for (const Instance& in : corpus.all) {
    if (!in.mr()) continue;
    const CubicAlgebra& A = in.algebra();
    const Quotient& q = in.quotient();
    std::set<Permutation> ker;
    for (const Permutation& p : in.aut()) {
      bool trivial = true;
      for (Elem x : range(A)) trivial = trivial && q.eta(p[at(x)]) == q.eta(x);
      if (trivial) ker.insert(p);
    }
    const std::set<Permutation> inner(in.inner().begin(), in.inner().end());
    v.require(ker == inner, in.name() + ": Inn differs from the kernel of C");
    v.claim("thm:kerFilter", in);
    v.claim("def:innerAut", in);
  }
  return v;
}

Verdict inner_theory(const Corpus& corpus) {
  Verdict v;
  for (const Instance* in : corpus.named({"C1", "C2", "C3", kFilterA, kFilterB})) {
    const CubicAlgebra& A = in->algebra();
    for (const Permutation& phi : in->inner())
      for (Elem z : range(A)) v.require(recover(A, phi, z) == phi[at(z)], in->name() + ": recovery differs from phi");
    for (const char* id : {"lem:fixed", "lem:DeltaFixed", "lem:repsMD", "lem:gotIt", "cor:intersect", "cor:metsExist"})
      v.claim(id, *in);
  }
  return v;
}

Verdict recovery(const Corpus& corpus) {
  Verdict v;
  for (const Instance* in : corpus.named({"C1", "C2", "C3"})) {
    const CubicAlgebra& A = in->algebra();
    const Quotient& q = in->quotient();
    const Filter whole = Filter::whole(q.algebra);
    std::set<Filter> boolean;
    for (const Filter& g : enumerate_filters(q.algebra))
      if (is_F_boolean(g, whole)) boolean.insert(g);
    std::set<Filter> image;
    for (const Permutation& phi : in->inner()) {
      const Filter g = omega(A, q, phi);
      image.insert(g);
      v.require(phi_from_boolean_filter(A, q, g) == phi, in->name() + ": phi_G(Omega(phi)) != phi");
      for (const Permutation& psi : in->inner())
        v.require(omega(A, q, compose(phi, psi)) == boolean_filter_sum(g, omega(A, q, psi)),
                  in->name() + ": Omega is not a homomorphism");
    }
    v.require(image.size() == in->inner().size() && image == boolean, in->name() + ": Omega is not a bijection onto the Boolean filters");
    for (const Filter& g : boolean) v.require(omega(A, q, phi_from_boolean_filter(A, q, g)) == g, in->name() + ": Omega(phi_G) != G");
    for (const char* id : {"thm:MPhiIsGood", "thm:recoveryII", "thm:isoGroups"}) v.claim(id, *in);
  }
  return v;
}

void implications_agree(Verdict& v, const FilterLattice& fl, const Filter& g, const Filter& f, const std::string& where) {
  try {
    const Filter e = impl_elem(g, f);
    v.require(fl.impl_join(g, f) == e && fl.impl_sup(g, f) == e, where + ": filter implications disagree");
  } catch (const Error& e) {
    v.require(false, where + ": " + e.what());
  }
}

Verdict filter_calculus(const Corpus& corpus) {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  std::size_t drawn = 0;
  while (drawn < kFilterPairs && v.ok()) {
    const Instance& in = corpus.all[rng() % corpus.all.size()];
    const auto& fs = in.filters().filters();
    const Filter& f = fs[rng() % fs.size()];
    std::vector<const Filter*> subs;
    for (const Filter& g : fs)
      if (g.subset_of(f)) subs.push_back(&g);
    const Filter& g = *subs[rng() % subs.size()];
    implications_agree(v, in.filters(), g, f, in.name() + " pair " + std::to_string(drawn));
    ++drawn;
  }
  v.require(drawn >= 100, "fewer than 100 seeded filter pairs");

  const Quotient& q = corpus.get("C2").quotient();
  const FilterLattice fl(q.algebra);
  for (const Filter& f : fl.filters()) {
    for (const Filter& g : fl.filters()) {
      if (g.subset_of(f)) {
        implications_agree(v, fl, g, f, "C(C2)");
        continue;
      }
      bool refused = false;
      try {
        impl_elem(g, f);
      } catch (const Error& e) {
        refused = e.kind() == ErrorKind::NotSubfilter;
      }
      v.require(refused, "C(C2): G -> F accepted a G outside F");
    }
  }
  for (const Instance* in : corpus.named({"C2", "C3"}))
    for (const char* id : {"lem:twoThreeSame", "thm:lots", "thm:Boolean", "lem:localBoolean", "lem:localPrincBool"})
      v.claim(id, *in);
  return v;
}

Verdict functors(const Corpus& corpus) {
  Verdict v;
  std::vector<Instance> bases{Instance::from_pairs("I(B2)", fixtures::cube(2)),
                              Instance::from_pairs("I(B3)", fixtures::cube(3)),
                              Instance::from_pairs("I(I3)", fixtures::n5())};
  const BooleanAlgebra b3(3);
  const auto seeded = random_implication_subalgebras(kSeed, kSeededAlgebras);
  v.require(seeded.size() == kSeededAlgebras, "seeded implication algebras not distinct");
  for (std::size_t i = 0; i < seeded.size(); ++i)
    bases.push_back(Instance::from_pairs("I(seeded" + std::to_string(i) + ")",
                                         build_I(implication_subalgebra(b3, seeded[i]).algebra)));
  for (const Instance& in : bases) {
    v.claim("thm:isoIota", in);
    v.claim("nat:e", in);
    v.claim("nat:eta", in);
  }
  for (const Instance* in : corpus.named({"C1", "C2", "C3", "N5"})) v.claim("rem:kappa", *in);
  for (const char* id : {"thm:incl", "cor:restrict", "lem:collapseDewt"}) v.claim(id, corpus.get("C2"));
  return v;
}

Verdict localization(const Corpus& corpus) {
  Verdict v;
  for (const Instance* in : corpus.named({"C2", "C3"})) {
    const CubicAlgebra& A = in->algebra();
    for (Elem a : range(A)) {
      const Localization loc = localize(A, a, false);
      for (Elem x : range(A))
        v.require(loc.members.test(at(x)) == A.preceq(a, x), in->name() + ": membership differs from a preceq x");
    }
    v.claim("lem:kl", *in);
    v.claim("eq:oneAA", *in);
  }
  v.claim("lem:intComp", corpus.get("C3"));
  return v;
}

Verdict presentations(const Corpus& corpus) {
  Verdict v;
  for (const Instance* in : corpus.named({"C2", "C3"})) v.claim("thm:present", *in);

  const Instance& c3 = corpus.get("C3");
  const CubicAlgebra& A = c3.algebra();
  const auto& aut = c3.aut();
  std::mt19937_64 rng(kSeed);
  for (std::size_t i = 0; i < kClosureInstances; ++i) {
    std::vector<Elem> points;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) points.push_back(static_cast<Elem>(rng() % A.size()));
    std::vector<Permutation> gens;
    for (std::size_t k = rng() % 3; k > 0; --k) gens.push_back(aut[rng() % aut.size()]);
    const std::string tag = "C3 closure " + std::to_string(i);

    const ElementSet l = localize_closure(A, points, gens);
    for (Elem x : points) v.require(l.test(at(x)), tag + ": misses a point");
    v.require(is_upward_closed(A, l) && is_subalgebra(A, l), tag + ": not an upward-closed subalgebra");
    if (!v.ok()) break;
    const Subalgebra sub = induced_subalgebra(A, l);
    v.require(check_mr_axiom(sub.algebra).passed, tag + ": fails MR");
    v.require(presentation_check(sub.algebra, sub.algebra.minimal_elements()), tag + ": vertices do not present it");
    for (const Permutation& s : gens) {
      Permutation r;
      for (Elem x : sub.to_parent) r.push_back(sub.from_parent[at(s[at(x)])]);
      v.require(std::count(r.begin(), r.end(), kUndefined) == 0 && is_automorphism(sub.algebra, r),
                tag + ": a generator does not restrict to an automorphism");
    }
  }
  return v;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const Corpus corpus;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"axioms", [&] { return axioms(corpus); }},
      {"counting", [] { return counting(); }},
      {"groups", [] { return groups(); }},
      {"kernel", [&] { return kernel(corpus); }},
      {"inner automorphisms", [&] { return inner_theory(corpus); }},
      {"recovery and isomorphism", [&] { return recovery(corpus); }},
      {"filter calculus", [&] { return filter_calculus(corpus); }},
      {"functors", [&] { return functors(corpus); }},
      {"localization", [&] { return localization(corpus); }},
      {"presentations", [&] { return presentations(corpus); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const Error& e) {
      v.require(false, std::string("error: ") + e.what());
    }
    all = all && v.ok();
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): " << (v.ok() ? "PASS" : "FAIL");
    if (!v.ok()) std::cout << "  " << v.failure();
    std::cout << "  [" << static_cast<long>(seconds_since(t) * 1000) << " ms]\n";
  }
  const double total = seconds_since(t0);
  const bool in_budget = total < kSuiteBudgetSeconds;
  std::cout << "runtime: " << (in_budget ? "PASS" : "FAIL") << "  " << static_cast<long>(total * 1000) << " ms, budget "
            << static_cast<long>(kSuiteBudgetSeconds) << " s\n";
  return all && in_budget ? 0 : 1;
}
