#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "mrkit/automorphism_search.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/error.hpp"
#include "mrkit/functors.hpp"
#include "mrkit/subalgebra.hpp"

using namespace mrkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

/// Every implication subalgebra of B_n, by brute force over subsets.
std::vector<std::vector<Mask>> all_implication_subalgebras(const BooleanAlgebra& B) {
  std::vector<std::vector<Mask>> out;
  const std::size_t n = B.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!(bits >> B.top() & 1)) continue;
    std::vector<Mask> S;
    for (Mask m = 0; m < n; ++m)
      if (bits >> m & 1) S.push_back(m);
    bool closed = true;
    for (Mask x : S)
      for (Mask y : S) closed = closed && (bits >> B.implies(x, y) & 1) && (bits >> B.join(x, y) & 1);
    if (closed) out.push_back(S);
  }
  return out;
}

}  // namespace

TEST_CASE("boolean_algebra") {
  CHECK(BooleanAlgebra(0).size() == 1);
  const BooleanAlgebra b2(2);
  CHECK(b2.size() == 4);
  std::vector<std::string> labels;
  for (Mask m : b2.elements()) labels.push_back(b2.label(m));
  CHECK(labels == std::vector<std::string>{"0", "p", "q", "1"});
  const BooleanAlgebra b3(3);
  CHECK(b3.size() == 8);
  CHECK(b3.label(0b011) == "pq");
  CHECK(b3.parse("pr") == 0b101);
  for (Mask x : b3.elements()) {
    CHECK(b3.complement(b3.complement(x)) == x);
    for (Mask y : b3.elements()) {
      CHECK(b3.complement(b3.join(x, y)) == b3.meet(b3.complement(x), b3.complement(y)));
      CHECK(b3.complement(b3.meet(x, y)) == b3.join(b3.complement(x), b3.complement(y)));
    }
  }
  CHECK(kind_of([] { BooleanAlgebra(17); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { BooleanAlgebra(4, 3); }) == ErrorKind::CapExceeded);
}

TEST_CASE("implication_subalgebra") {
  const BooleanAlgebra b2(2);
  const auto& i3 = fixtures::i3();
  CHECK(i3.algebra.size() == 3);
  const Elem p = i3.algebra.at("p"), q = i3.algebra.at("q");
  CHECK(i3.algebra.implies(p, q) == q);
  CHECK(i3.algebra.implies(q, p) == p);
  CHECK_FALSE(i3.algebra.is_lattice());
  CHECK_FALSE(i3.algebra.bottom());

  const auto whole = as_implication_algebra(b2);
  CHECK(whole.algebra.size() == 4);
  CHECK(whole.algebra.is_lattice());
  CHECK(whole.algebra.bottom() == Elem{0});

  CHECK(implication_subalgebra(b2, {0b01, 0b11}).algebra.size() == 2);
  CHECK(kind_of([&] { implication_subalgebra(b2, {0b00, 0b01, 0b11}); }) == ErrorKind::NotClosed);
  CHECK(kind_of([&] { implication_subalgebra(b2, {0b01, 0b10}); }) == ErrorKind::NotClosed);
}

TEST_CASE("implication algebra laws") {
  const BooleanAlgebra b3(3);
  for (const auto& S : all_implication_subalgebras(b3)) {
    const auto sub = implication_subalgebra(b3, S);
    const ImplicationAlgebra& I = sub.algebra;
    for (Elem a = 0; a < static_cast<Elem>(I.size()); ++a)
      for (Elem b = 0; b < static_cast<Elem>(I.size()); ++b)
        CHECK((I.join(a, b) == I.one()) == (I.implies(a, b) == b));
  }
}

TEST_CASE("build_I") {
  const PairAlgebra& c1 = fixtures::cube(1);
  CHECK(c1.algebra.labels() == std::vector<std::string>{"<0,1>", "<1,0>", "<1,1>"});
  CHECK(fixtures::cube(2).algebra.size() == 9);
  const PairAlgebra& n5 = fixtures::n5();
  CHECK(n5.algebra.labels() == std::vector<std::string>{"<p,1>", "<q,1>", "<1,p>", "<1,q>", "<1,1>"});
  CHECK_FALSE(n5.index_of(n5.base.at("p"), n5.base.at("q")));
  CHECK(check_cubic_axioms(n5.algebra).passed);
  CHECK_FALSE(check_mr_axiom(n5.algebra).passed);
}

TEST_CASE("build_I is MR exactly over lattices") {
  for (unsigned n : {2u, 3u}) {
    const BooleanAlgebra B(n);
    for (const auto& S : all_implication_subalgebras(B)) {
      const auto sub = implication_subalgebra(B, S);
      const PairAlgebra pa = build_I(sub.algebra);
      CHECK(check_cubic_axioms(pa.algebra).passed);
      CHECK(check_mr_axiom(pa.algebra).passed == sub.algebra.is_lattice());
    }
  }
}

TEST_CASE("embed_e") {
  const PairAlgebra& c2 = fixtures::cube(2);
  CHECK(c2.algebra.label(embed_e(c2, c2.base.one())) == "<1,1>");
  CHECK(c2.algebra.label(embed_e(c2, c2.base.at("p"))) == "<1,p>");
  const PairAlgebra& n5 = fixtures::n5();
  CHECK(n5.algebra.label(embed_e(n5, n5.base.at("q"))) == "<1,q>");

  for (const PairAlgebra* pa : {&fixtures::cube(1), &c2, &fixtures::cube(3), &n5}) {
    const ImplicationAlgebra& I = pa->base;
    const CubicAlgebra& A = pa->algebra;
    for (Elem a = 0; a < static_cast<Elem>(I.size()); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(I.size()); ++b) {
        CHECK(embed_e(*pa, I.join(a, b)) == A.join(embed_e(*pa, a), embed_e(*pa, b)));
        CHECK(embed_e(*pa, I.implies(a, b)) == A.implies(embed_e(*pa, a), embed_e(*pa, b)));
        CHECK(I.leq(a, b) == A.leq(embed_e(*pa, a), embed_e(*pa, b)));
      }
    }
    for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
      const auto [a, b] = pa->pair(x);
      CHECK(A.antipode(x) == pa->at(b, a));
    }
  }
}

TEST_CASE("face_poset") {
  const std::size_t expected[] = {1, 3, 9, 27, 81};
  for (unsigned n = 0; n <= 4; ++n) {
    const FacePoset faces = face_poset(n);
    CHECK(faces.algebra.size() == expected[n]);
    const PairAlgebra interval = build_I(as_implication_algebra(BooleanAlgebra(n)).algebra);
    CHECK(interval.algebra.size() == expected[n]);
    const CubicHom iso{&faces.algebra, &interval.algebra, face_to_interval(faces, interval)};
    CHECK(is_isomorphism(iso));
  }
  const FacePoset square = face_poset(2);
  CHECK(square.algebra.labels().front() == "++");
  CHECK(square.algebra.label(square.algebra.one()) == "**");
  CHECK(square.algebra.label(square.algebra.antipode(square.algebra.at("+-"))) == "-+");
  CHECK(kind_of([] { face_poset(5); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { face_poset(3, 26); }) == ErrorKind::CapExceeded);
}

TEST_CASE("filter_algebra") {
  const BooleanAlgebra b2(2);
  const FilterAlgebra fp = filter_algebra(b2, {0b01, 0b11});
  CHECK(fp.pairs.algebra.size() == 3);
  CHECK(find_isomorphism(fp.pairs.algebra, fixtures::cube(1).algebra));

  const FilterAlgebra whole = filter_algebra(b2, b2.elements());
  CHECK(whole.pairs.algebra.size() == 9);
  CHECK(whole.embedding == identity_permutation(9));

  // B2 x 2 = B3, and B2 x {1} is the principal filter at the new atom r.
  const BooleanAlgebra b3(3);
  const FilterAlgebra ultra = filter_algebra(b3, {0b100, 0b101, 0b110, 0b111});
  CHECK(find_isomorphism(ultra.pairs.algebra, fixtures::cube(2).algebra));

  for (const FilterAlgebra* f : {&fp, &whole, &ultra}) {
    const ElementSet image = make_set(f->ambient.algebra.size(), f->embedding);
    CHECK(is_upward_closed(f->ambient.algebra, image));
    CHECK(is_subalgebra(f->ambient.algebra, image));
    CHECK(check_mr_axiom(f->pairs.algebra).passed);
    const CubicHom inclusion{&f->pairs.algebra, &f->ambient.algebra, f->embedding};
    CHECK(check_hom(inclusion).passed);
  }
  CHECK(kind_of([&] { filter_algebra(b2, {0b01, 0b10, 0b11}); }) == ErrorKind::NotAFilter);
  CHECK(kind_of([&] { filter_algebra(b2, {0b01}); }) == ErrorKind::NotAFilter);
}

TEST_CASE("presentations") {
  const CubicAlgebra& c2 = fixtures::c2();
  CHECK(presentation_check(c2, {c2.at("<1,0>")}));
  CHECK_FALSE(presentation_check(c2, {c2.one()}));
  const CubicAlgebra& n5 = fixtures::n5().algebra;
  CHECK(presentation_check(n5, {n5.at("<1,p>"), n5.at("<1,q>")}));

  const Filter f = gfilter_from_presentation(c2, {c2.at("<1,0>")});
  CHECK(f == Filter::principal(c2, c2.at("<1,0>")));
  CHECK(is_gfilter(c2, f));

  const auto chain = caret_chain(c2, {c2.at("<1,p>"), c2.at("<1,q>")});
  CHECK(c2.label(chain.back()) == "<q,p>");
  CHECK(kind_of([&] { gfilter_from_presentation(c2, {c2.at("<1,p>"), c2.at("<1,q>")}); }) ==
        ErrorKind::NotAPresentation);
  CHECK(kind_of([&] { gfilter_from_presentation(n5, {n5.at("<1,p>"), n5.at("<1,q>")}); }) == ErrorKind::NotMR);
  CHECK(kind_of([&] { caret_chain(n5, {n5.at("<1,p>"), n5.at("<1,q>")}); }) == ErrorKind::CaretUndefined);

  const CubicAlgebra& point = fixtures::point().algebra;
  CHECK(gfilter_from_presentation(point, {point.one()}).size() == 1);
}
