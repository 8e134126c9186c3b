#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mrkit/boolean_algebra.hpp"
#include "mrkit/cubic_algebra.hpp"
#include "mrkit/filters.hpp"
#include "mrkit/implication_algebra.hpp"

namespace mrkit {

/// Element <a, b> of the pair algebra, by base indices.
using PairElement = std::pair<Elem, Elem>;

/// The pair algebra I(I) over an implication algebra: pairs <a, b> with
/// a v b = 1 and a meet b existing, componentwise order and join, and
/// Delta(<a,b>, <c,d>) = <a meet (b -> d), b meet (a -> c)>.
///
/// Carrier indices follow lexicographic (a, b) order.
struct PairAlgebra {
  ImplicationAlgebra base;
  std::vector<PairElement> pairs;
  CubicAlgebra algebra;

  std::optional<Elem> index_of(Elem a, Elem b) const;
  Elem at(Elem a, Elem b) const;
  const PairElement& pair(Elem x) const { return pairs.at(static_cast<std::size_t>(x)); }
};

PairAlgebra build_I(const ImplicationAlgebra& base, std::size_t max_carrier = kDefaultMaxCarrier);

/// e(a) = <1, a>.
Elem embed_e(const PairAlgebra& pa, Elem a);

/// Face lattice of the n-cube. Each face is a sign vector over {+, -, *},
/// coded in two bits per coordinate (+ = 01, - = 10, * = 11); order is code
/// inclusion, join is bitwise or, and Delta(y, x) swaps + and - wherever y
/// has * and x does not. Indices follow lexicographic order with + < - < *.
struct FacePoset {
  unsigned dimension = 0;
  std::vector<std::uint32_t> codes;
  CubicAlgebra algebra;
};

FacePoset face_poset(unsigned n, std::size_t max_carrier = kDefaultMaxCarrier);

/// Face index -> index in build_I over the powerset on n atoms: coordinate i
/// is + when i is outside a, * when i lies in a and b, - when in a only.
std::vector<Elem> face_to_interval(const FacePoset& faces, const PairAlgebra& interval);

/// I(F) for a filter F of a Boolean algebra, with its inclusion into I(B).
struct FilterAlgebra {
  PairAlgebra ambient;         ///< I(B)
  ImplicationSubalgebra base;  ///< F as an implication algebra
  PairAlgebra pairs;           ///< I(F)
  std::vector<Elem> embedding; ///< I(F) index -> I(B) index
};

/// Throws NotAFilter unless F is a nonempty up-closed, meet-closed subset.
FilterAlgebra filter_algebra(const BooleanAlgebra& B, const std::vector<Mask>& F,
                             std::size_t max_carrier = kDefaultMaxCarrier);

/// True iff every element lies in the localization at some member of S.
bool presentation_check(const CubicAlgebra& algebra, const std::vector<Elem>& S);

/// b_0 = a_0, b_{n+1} = b_n ^ a_{n+1}. Throws CaretUndefined.
std::vector<Elem> caret_chain(const CubicAlgebra& algebra, const std::vector<Elem>& seq);

/// Up-closure of the caret chain of a presentation. Throws NotMR,
/// NotAPresentation; an output that fails is_gfilter is an Internal error.
/// `check_mr = false` skips the MR test for callers that already ran it.
Filter gfilter_from_presentation(const CubicAlgebra& algebra, const std::vector<Elem>& seq, bool check_mr = true);

}  // namespace mrkit
