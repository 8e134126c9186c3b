#pragma once

#include <vector>

#include "mrkit/axioms.hpp"
#include "mrkit/constructions.hpp"
#include "mrkit/cubic_algebra.hpp"
#include "mrkit/implication_algebra.hpp"

namespace mrkit {

/// A map between cubic algebras given by its image array. Pointers are
/// non-owning.
struct CubicHom {
  const CubicAlgebra* source = nullptr;
  const CubicAlgebra* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map.at(static_cast<std::size_t>(x)); }
};

struct ImplicationHom {
  const ImplicationAlgebra* source = nullptr;
  const ImplicationAlgebra* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map.at(static_cast<std::size_t>(x)); }
};

/// Checks preservation of 1 ("top", witness ()), join ("join", (x, y)),
/// Delta ("delta", (x, y) with y <= x) and sim ("sim", (x, y)).
AxiomReport check_hom(const CubicHom& f);
/// Checks preservation of 1, join and implication.
AxiomReport check_implication_hom(const ImplicationHom& f);

bool is_bijective(const std::vector<Elem>& map, std::size_t target_size);
bool is_isomorphism(const CubicHom& f);
bool is_isomorphism(const ImplicationHom& f);

/// I(f)(<a, b>) = <f(a), f(b)>. Throws MembershipBroken when an image pair
/// leaves the target carrier.
CubicHom functor_I_hom(const PairAlgebra& source, const PairAlgebra& target, const ImplicationHom& f);

/// The quotient C(L) = L / sim as an implication algebra.
///
/// Classes are numbered by their least member. [x] v [y] = [x * y];
/// [x] -> [y] is the complement of [x] v [y] in the interval [[y], 1].
/// Each class is labelled by its largest member.
struct Quotient {
  const CubicAlgebra* source = nullptr;
  std::vector<Elem> class_of;  ///< eta
  std::vector<std::vector<Elem>> classes;
  ImplicationAlgebra algebra;

  Elem eta(Elem x) const { return class_of.at(static_cast<std::size_t>(x)); }
  /// eta^{-1} of a set of classes.
  ElementSet preimage(const ElementSet& classes_set) const;
  /// eta of a set of elements.
  ElementSet image(const ElementSet& elements) const;
};

Quotient quotient_C(const CubicAlgebra& algebra);

/// C(f)([x]) = [f(x)]. Throws Internal if f does not respect sim.
ImplicationHom functor_C_hom(const Quotient& source, const Quotient& target, const CubicHom& f);

/// iota(a) = [<1, a>] from the base of a pair algebra into its quotient.
ImplicationHom iota(const PairAlgebra& pa, const Quotient& q);
/// [<a, b>] -> a meet b. Throws Internal if a class has two values.
ImplicationHom iota_inverse(const PairAlgebra& pa, const Quotient& q);

/// kappa(x) = <1, [x]> into I(C(L)); a plain map with its injectivity and
/// surjectivity.
struct KappaMap {
  std::vector<Elem> map;
  bool injective = false;
  bool surjective = false;
};

KappaMap kappa(const Quotient& q, const PairAlgebra& icq);

/// Checks that for an upward-closed subalgebra M the classes of M are the
/// classes of the ambient algebra cut down to M. Throws NotUpwardClosed.
bool inclusion_collapse(const CubicAlgebra& algebra, const Quotient& q, const ElementSet& sub);

}  // namespace mrkit
