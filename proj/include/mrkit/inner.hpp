#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mrkit/automorphism_search.hpp"
#include "mrkit/constructions.hpp"
#include "mrkit/filters.hpp"
#include "mrkit/functors.hpp"

namespace mrkit {

/// The unique (alpha, beta) in F x F with beta <= alpha and
/// x = Delta(alpha, beta). Throws NoDecomposition when there is none, and
/// Internal when there are several.
std::pair<Elem, Elem> alpha_beta(const CubicAlgebra& algebra, const Filter& f, Elem x);

/// phi(x) = Delta(beta_G(alpha_F(x)), beta_G(beta_F(x))). Throws NotGFilter.
Permutation filter_automorphism(const CubicAlgebra& algebra, const Filter& f, const Filter& g);

/// True iff x ~ phi(x) for every x.
bool is_inner(const CubicAlgebra& algebra, const Permutation& phi);

struct InnerGroupReport {
  std::vector<Permutation> inner;
  bool subgroup = false;
  bool normal = false;
  bool abelian = false;
  bool two_torsion = false;
  bool kernel_agrees = false;  ///< inner == { phi : C(phi) = id }
};

InnerGroupReport inner_group(const CubicAlgebra& algebra, const std::vector<Permutation>& aut);

/// M_phi = { x : phi(x) = x }. Throws NotInner.
ElementSet fixed_set(const CubicAlgebra& algebra, const Permutation& phi);
/// D_phi = eta^{-1}[ C(M_phi) -> C(M) ]. Throws NotInner.
ElementSet d_set(const CubicAlgebra& algebra, const Quotient& q, const Permutation& phi);

/// (z v phi(z), z v Delta(1, phi(z))). Throws NotInner.
std::pair<Elem, Elem> decompose(const CubicAlgebra& algebra, const Permutation& phi, Elem z);
/// z0 meet Delta(1, z1) for the decomposition of z.
Elem recover(const CubicAlgebra& algebra, const Permutation& phi, Elem z);

/// Omega(phi) = C(M_phi) as a filter of the quotient.
Filter omega(const CubicAlgebra& algebra, const Quotient& q, const Permutation& phi);

/// phi_G(x) = x1 meet Delta(1, x2), over the unique split x = x1 meet x2
/// with x1 in eta^{-1}[G], x2 in eta^{-1}[G -> C(M)]. Throws NotBoolean or
/// SplitFailure.
Permutation phi_from_boolean_filter(const CubicAlgebra& algebra, const Quotient& q, const Filter& g);

/// f_ab(w) = (w v b) meet (Delta(1, w) v b), for a ~ b and w >= a. Throws
/// NotSim.
Elem f_ab(const CubicAlgebra& algebra, Elem a, Elem b, Elem w);
/// f^_ab(z) = f_ab(z v a) meet Delta(1, f_ab((Delta(1,z) v a) -> a) -> b),
/// evaluated on every element of `algebra` (a localization at a).
Permutation f_hat_ab(const CubicAlgebra& algebra, Elem a, Elem b);
/// (z v Delta(z v g, g)) meet Delta(1, z v Delta(z v h, h)), h = g -> a.
Permutation phi_g(const CubicAlgebra& algebra, Elem a, Elem g);
/// (z v Delta(g v z, g)) meet (z v Delta(h v z, h)); nullopt if the meet is
/// missing.
std::optional<Elem> int_comp(const CubicAlgebra& algebra, Elem a, Elem g, Elem z);

/// Caret-closure alternating with orbit closure under `generators`, then the
/// union of the localizations at the resulting points.
ElementSet localize_closure(const CubicAlgebra& algebra, const std::vector<Elem>& points,
                            const std::vector<Permutation>& generators);

/// A g-filter F of an MR algebra with everything derived from it: F as an
/// implication algebra, the F-presentation phi_F : M -> I(F), the quotients
/// of M and I(F), iota_F, Xi, and the extension of automorphisms of F.
class FilterFrame {
 public:
  /// Throws NotGFilter.
  FilterFrame(const CubicAlgebra& algebra, const Filter& f);

  const CubicAlgebra& algebra() const { return *algebra_; }
  const Filter& filter() const { return f_; }
  const ImplicationAlgebra& base() const { return pairs_->base; }
  const PairAlgebra& pairs() const { return *pairs_; }
  const Quotient& quotient() const { return *q_m_; }
  const Quotient& pair_quotient() const { return *q_i_; }

  /// F-index -> element of M, ascending.
  const std::vector<Elem>& members() const { return members_; }
  std::optional<Elem> base_index(Elem x) const;

  /// phi_F(x) = <Delta(1, x) v beta_F(x), x v beta_F(x)> as an index of I(F).
  const CubicHom& presentation() const { return presentation_; }
  const CubicHom& presentation_inverse() const { return presentation_inverse_; }

  /// Xi(alpha) = iota_F^{-1} C(phi_F) alpha C(phi_F^{-1}) iota_F.
  Permutation xi(const Permutation& alpha) const;
  /// phi_F^{-1} o I(chi) o phi_F.
  Permutation extend(const Permutation& chi) const;

  struct Factoring {
    Filter g;
    Permutation chi;
    bool reconstructs = false;  ///< phi == filter_automorphism(F, G) o extend(chi)
  };
  Factoring factor(const Permutation& phi) const;

 private:
  const CubicAlgebra* algebra_;
  Filter f_;
  std::vector<Elem> members_;
  std::unique_ptr<PairAlgebra> pairs_;
  std::unique_ptr<Quotient> q_m_;
  std::unique_ptr<Quotient> q_i_;
  CubicHom presentation_;
  CubicHom presentation_inverse_;
  ImplicationHom c_presentation_;
  ImplicationHom c_presentation_inverse_;
  ImplicationHom iota_;
  ImplicationHom iota_inverse_;
};

}  // namespace mrkit
