#include <doctest.h>

#include "fixtures.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/error.hpp"
#include "mrkit/localization.hpp"
#include "oracle.hpp"

using namespace mrkit;
using fixtures::c1;
using fixtures::c2;
using fixtures::c3;

namespace {

const CubicAlgebra& n5() { return fixtures::n5().algebra; }
const CubicAlgebra& point() { return fixtures::point().algebra; }

std::vector<const CubicAlgebra*> corpus() { return {&point(), &c1(), &c2(), &c3(), &n5()}; }

Elem at(const CubicAlgebra& A, const char* label) { return A.at(label); }

}  // namespace

TEST_CASE("pair tables agree with direct mask arithmetic") {
  for (unsigned n : {1u, 2u, 3u}) {
    const CubicAlgebra& A = fixtures::cube(n).algebra;
    const oracle::Cube cube{n};
    const auto carrier = cube.carrier();
    REQUIRE(A.size() == carrier.size());
    for (auto x : carrier) {
      for (auto y : carrier) {
        const Elem ix = A.at(cube.label(x)), iy = A.at(cube.label(y));
        CHECK(A.leq(ix, iy) == cube.leq(x, y));
        CHECK(A.label(A.join(ix, iy)) == cube.label(cube.join(x, y)));
        const auto m = cube.meet(x, y);
        const auto am = A.meet(ix, iy);
        REQUIRE(am.has_value() == m.has_value());
        if (m) CHECK(A.label(*am) == cube.label(*m));
        if (cube.leq(y, x)) CHECK(A.label(A.delta(ix, iy)) == cube.label(cube.delta(x, y)));
      }
    }
  }
}

TEST_CASE("join") {
  CHECK(c2().label(c2().join(at(c2(), "<1,p>"), at(c2(), "<1,q>"))) == "<1,1>");
  for (Elem x = 0; x < 9; ++x) CHECK(c2().join(x, x) == x);
  CHECK(c1().label(c1().join(at(c1(), "<1,0>"), at(c1(), "<0,1>"))) == "<1,1>");
  CHECK_THROWS_AS(c2().join(0, 9), Error);
}

TEST_CASE("meet") {
  const auto m = c2().meet(at(c2(), "<1,q>"), at(c2(), "<1,p>"));
  REQUIRE(m);
  CHECK(c2().label(*m) == "<1,0>");
  CHECK_FALSE(n5().meet(at(n5(), "<1,p>"), at(n5(), "<q,1>")));
  for (Elem x = 0; x < 27; ++x) CHECK(c3().meet(x, c3().one()) == x);
}

TEST_CASE("delta") {
  CHECK(c2().label(c2().delta(at(c2(), "<1,1>"), at(c2(), "<1,p>"))) == "<p,1>");
  for (Elem x = 0; x < 9; ++x) CHECK(c2().delta(x, x) == x);
  CHECK(c1().label(c1().delta(c1().one(), at(c1(), "<1,0>"))) == "<0,1>");
  try {
    c2().delta(at(c2(), "<1,p>"), at(c2(), "<1,q>"));
    FAIL("expected DeltaUndefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DeltaUndefined);
  }
  CHECK_FALSE(c2().try_delta(at(c2(), "<1,p>"), at(c2(), "<1,q>")));
}

TEST_CASE("implies") {
  for (const CubicAlgebra* A : corpus()) {
    for (Elem x = 0; x < static_cast<Elem>(A->size()); ++x) {
      CHECK(A->implies(x, x) == A->one());
      CHECK(A->implies(A->one(), x) == x);
    }
  }
  CHECK(c2().label(c2().implies(at(c2(), "<1,p>"), at(c2(), "<1,q>"))) == "<1,q>");
}

TEST_CASE("caret and star") {
  const auto c = c2().caret(at(c2(), "<1,p>"), at(c2(), "<1,q>"));
  REQUIRE(c);
  CHECK(c2().label(*c) == "<q,p>");
  for (Elem x = 0; x < 9; ++x) {
    CHECK(c2().caret(x, x) == x);
    CHECK(c2().star(x, x) == x);
  }
  CHECK_FALSE(n5().caret(at(n5(), "<1,p>"), at(n5(), "<1,q>")));
  CHECK(c2().label(c2().star(at(c2(), "<1,p>"), at(c2(), "<1,q>"))) == "<1,1>");
  // sim-related arguments: x * y = x
  CHECK(c1().label(c1().star(at(c1(), "<1,0>"), at(c1(), "<0,1>"))) == "<1,0>");
}

TEST_CASE("preceq and sim") {
  CHECK(c2().sim(at(c2(), "<q,p>"), at(c2(), "<p,q>")));
  for (Elem x = 0; x < 9; ++x) CHECK(c2().sim(x, x));
  // x <= y always gives x preceq y
  CHECK(c2().preceq(at(c2(), "<1,0>"), at(c2(), "<1,p>")));
  CHECK_FALSE(c2().preceq(at(c2(), "<1,p>"), at(c2(), "<1,0>")));
  CHECK_FALSE(c2().sim(at(c2(), "<1,p>"), at(c2(), "<1,q>")));
}

TEST_CASE("axiom checker") {
  for (const CubicAlgebra* A : corpus()) CHECK(check_cubic_axioms(*A).passed);

  auto t = c2().tables();
  const Elem top = c2().one(), edge = at(c2(), "<1,p>");
  t.delta[static_cast<std::size_t>(top)][static_cast<std::size_t>(edge)] = top;
  const CubicAlgebra patched = CubicAlgebra::from_tables(t, Validation::Raw);
  const AxiomReport r = check_cubic_axioms(patched);
  CHECK_FALSE(r.passed);
  CHECK(r.mentions("c"));
  for (const auto& v : r.violations) CHECK(replay_violation(patched, v));
  CHECK_THROWS_AS(CubicAlgebra::from_tables(t), Error);

  const AxiomReport all = check_cubic_axioms(patched, WitnessPolicy::All);
  CHECK(all.violations.size() >= r.violations.size());
  for (const auto& v : all.violations) CHECK(replay_violation(patched, v));
}

TEST_CASE("malformed tables") {
  auto t = c2().tables();
  t.delta[0][1] = 3;  // <0,1> and <p,q> are incomparable
  try {
    CubicAlgebra::from_tables(t, Validation::Raw);
    FAIL("expected MalformedTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedTable);
  }
}

TEST_CASE("MR axiom and caret totality") {
  CHECK(check_mr_axiom(c2()).passed);
  CHECK(caret_total(c2()));
  CHECK(check_mr_axiom(c1()).passed);
  CHECK(check_mr_axiom(c3()).passed);

  const AxiomReport r = check_mr_axiom(n5());
  CHECK_FALSE(r.passed);
  CHECK_FALSE(caret_total(n5()));
  REQUIRE(r.violations.size() == 1);
  CHECK(format_witness(n5(), r.violations.front().witness) == "(<1,1>, <p,1>, <q,1>)");
  const AxiomReport all = check_mr_axiom(n5(), WitnessPolicy::All);
  const Violation expected{"mr", {n5().one(), at(n5(), "<1,p>"), at(n5(), "<1,q>")}};
  CHECK(std::find(all.violations.begin(), all.violations.end(), expected) != all.violations.end());
  for (const auto& v : all.violations) CHECK(replay_violation(n5(), v));
  const auto fail = first_caret_failure(n5());
  REQUIRE(fail);
  CHECK(n5().label(fail->first) == "<p,1>");
  CHECK(n5().label(fail->second) == "<q,1>");

  for (const CubicAlgebra* A : corpus()) CHECK(check_mr_axiom(*A).passed == caret_total(*A));
}

TEST_CASE("localization") {
  const Elem v = at(c2(), "<1,0>");
  const Localization loc = localize(c2(), v);
  CHECK(loc.members.all());
  const oracle::Cube cube{2};
  for (auto x : cube.carrier()) {
    const Elem i = c2().at(cube.label(x));
    CHECK(c2().label(loc.k(i)) == cube.label({cube.top(), ~x.a & cube.top()}));
    CHECK(c2().label(loc.l(i)) == cube.label({cube.top(), x.b}));
  }
  CHECK(to_vector(localize(c2(), c2().one()).members) == std::vector<Elem>{c2().one()});
  const ElementSet edge = localize(c2(), at(c2(), "<1,p>")).members;
  CHECK(edge == make_set(9, {at(c2(), "<1,p>"), at(c2(), "<p,1>"), at(c2(), "<1,1>")}));

  for (const CubicAlgebra* A : {&c2(), &c3()}) {
    for (Elem a = 0; a < static_cast<Elem>(A->size()); ++a) {
      const Localization l = localize(*A, a, false);
      const AxiomReport r = verify_localization(*A, l);
      CHECK_MESSAGE(r.passed, A->label(a));
    }
  }
}

TEST_CASE("from_pair") {
  const Elem v = at(c2(), "<1,0>");
  const Localization loc = localize(c2(), v);
  CHECK(c2().label(from_pair(c2(), loc, c2().one(), c2().one())) == "<0,1>");
  CHECK(from_pair(c2(), loc, v, v) == v);
  CHECK(c2().label(from_pair(c2(), loc, at(c2(), "<1,p>"), v)) == "<1,p>");
  try {
    from_pair(c2(), loc, v, at(c2(), "<1,p>"));
    FAIL("expected NoSuchPair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSuchPair);
  }
}

TEST_CASE("property: reflection laws") {
  for (const CubicAlgebra* A : corpus()) {
    const auto n = static_cast<Elem>(A->size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        CHECK(A->implies(A->implies(x, y), y) == A->join(x, y));
        if (A->leq(x, y)) {
          CHECK(A->join(A->delta(y, x), x) == y);
          CHECK(A->delta(y, A->delta(y, x)) == x);
        }
        for (Elem z = 0; z < n; ++z) {
          CHECK(A->implies(x, A->implies(y, z)) == A->implies(y, A->implies(x, z)));
          if (A->leq(x, y) && A->leq(y, z)) CHECK(A->leq(A->delta(z, x), A->delta(z, y)));
        }
      }
    }
  }
}

TEST_CASE("property: preceq, sim and meets") {
  for (const CubicAlgebra* A : corpus()) {
    const auto n = static_cast<Elem>(A->size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const auto m = A->meet(A->join(b, a), A->join(b, A->antipode(a)));
        if (m) CHECK(A->preceq(a, b) == (*m == b));
        if (A->meet(a, b)) {
          if (A->preceq(a, b)) CHECK(A->leq(a, b));
          if (A->sim(a, b)) CHECK(a == b);
        }
        CHECK(A->sim(a, b) == A->sim(b, a));
      }
    }
  }
}

TEST_CASE("property: sim is a congruence for caret and star") {
  for (const CubicAlgebra* A : corpus()) {
    const auto n = static_cast<Elem>(A->size());
    std::vector<std::vector<Elem>> cls(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (A->sim(x, y)) cls[static_cast<std::size_t>(x)].push_back(y);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y : cls[static_cast<std::size_t>(x)])
        for (Elem z : cls[static_cast<std::size_t>(y)]) CHECK(A->sim(x, z));
      for (Elem y = 0; y < n; ++y) {
        for (Elem x2 : cls[static_cast<std::size_t>(x)]) {
          for (Elem y2 : cls[static_cast<std::size_t>(y)]) {
            CHECK(A->sim(A->star(x, y), A->star(x2, y2)));
            const auto c = A->caret(x, y), c2 = A->caret(x2, y2);
            if (c && c2) CHECK(A->sim(*c, *c2));
          }
        }
      }
    }
  }
}

TEST_CASE("property: MR gives meets across complementary joins") {
  for (const CubicAlgebra* A : {&c1(), &c2(), &c3()}) {
    const auto n = static_cast<Elem>(A->size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (A->join(x, y) == A->one()) CHECK(A->meet(x, A->antipode(y)));
  }
}
