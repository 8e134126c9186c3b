#include "mrkit/inner.hpp"

#include <algorithm>

#include "mrkit/error.hpp"
#include "mrkit/localization.hpp"

namespace mrkit {

namespace {

Elem required_meet(const Semilattice& L, Elem x, Elem y, const char* where) {
  const auto m = L.meet(x, y);
  if (!m) throw Error(ErrorKind::Internal, std::string(where) + ": meet of " + L.label(x) + " and " + L.label(y) + " is missing");
  return *m;
}

void require_inner(const CubicAlgebra& A, const Permutation& phi) {
  if (phi.size() != A.size() || !is_inner(A, phi)) throw Error(ErrorKind::NotInner, "map is not an inner automorphism");
}

void require_gfilter(const CubicAlgebra& A, const Filter& f) {
  if (!is_gfilter(A, f)) throw Error(ErrorKind::NotGFilter, "filter does not generate the algebra");
}

bool contains(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

std::pair<Elem, Elem> alpha_beta(const CubicAlgebra& A, const Filter& f, Elem x) {
  A.check_index(x);
  std::optional<std::pair<Elem, Elem>> found;
  const auto members = f.elements();
  for (Elem a : members) {
    if (!A.leq(x, a)) continue;
    for (Elem b : members) {
      if (!A.leq(b, a) || A.delta(a, b) != x) continue;
      if (found) throw Error(ErrorKind::Internal, "decomposition of " + A.label(x) + " is not unique");
      found = std::pair{a, b};
    }
  }
  if (!found) throw Error(ErrorKind::NoDecomposition, "no decomposition of " + A.label(x) + " over the filter");
  return *found;
}

Permutation filter_automorphism(const CubicAlgebra& A, const Filter& f, const Filter& g) {
  require_gfilter(A, f);
  require_gfilter(A, g);
  Permutation out(A.size());
  for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
    const auto [af, bf] = alpha_beta(A, f, x);
    const Elem top = alpha_beta(A, g, af).second;
    const Elem bottom = alpha_beta(A, g, bf).second;
    out[static_cast<std::size_t>(x)] = A.delta(top, bottom);
  }
  return out;
}

bool is_inner(const CubicAlgebra& A, const Permutation& phi) {
  for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
    if (!A.sim(x, phi[static_cast<std::size_t>(x)])) return false;
  }
  return true;
}

InnerGroupReport inner_group(const CubicAlgebra& A, const std::vector<Permutation>& aut) {
  InnerGroupReport r;
  for (const auto& phi : aut) {
    if (is_inner(A, phi)) r.inner.push_back(phi);
  }
  std::sort(r.inner.begin(), r.inner.end());
  const Permutation id = identity_permutation(A.size());
  r.subgroup = contains(r.inner, id);
  r.abelian = true;
  r.two_torsion = true;
  for (const auto& p : r.inner) {
    if (compose(p, p) != id) r.two_torsion = false;
    if (!contains(r.inner, inverse(p))) r.subgroup = false;
    for (const auto& s : r.inner) {
      const Permutation ps = compose(p, s);
      if (!contains(r.inner, ps)) r.subgroup = false;
      if (ps != compose(s, p)) r.abelian = false;
    }
  }
  r.normal = true;
  for (const auto& psi : aut) {
    const Permutation psi_inv = inverse(psi);
    for (const auto& p : r.inner) {
      if (!contains(r.inner, compose(psi, compose(p, psi_inv)))) r.normal = false;
    }
  }
  const Quotient q = quotient_C(A);
  const Permutation class_id = identity_permutation(q.classes.size());
  r.kernel_agrees = true;
  for (const auto& phi : aut) {
    const bool in_kernel = functor_C_hom(q, q, CubicHom{&A, &A, phi}).map == class_id;
    if (in_kernel != contains(r.inner, phi)) r.kernel_agrees = false;
  }
  return r;
}

ElementSet fixed_set(const CubicAlgebra& A, const Permutation& phi) {
  require_inner(A, phi);
  ElementSet out = A.empty_set();
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] == static_cast<Elem>(x)) out.set(x);
  }
  return out;
}

Filter omega(const CubicAlgebra& A, const Quotient& q, const Permutation& phi) {
  return Filter::make(q.algebra, q.image(fixed_set(A, phi)));
}

ElementSet d_set(const CubicAlgebra& A, const Quotient& q, const Permutation& phi) {
  const Filter om = omega(A, q, phi);
  return q.preimage(impl_elem(om, Filter::whole(q.algebra)).members());
}

std::pair<Elem, Elem> decompose(const CubicAlgebra& A, const Permutation& phi, Elem z) {
  require_inner(A, phi);
  A.check_index(z);
  const Elem pz = phi[static_cast<std::size_t>(z)];
  return {A.join(z, pz), A.join(z, A.antipode(pz))};
}

Elem recover(const CubicAlgebra& A, const Permutation& phi, Elem z) {
  const auto [z0, z1] = decompose(A, phi, z);
  return required_meet(A, z0, A.antipode(z1), "recover");
}

Permutation phi_from_boolean_filter(const CubicAlgebra& A, const Quotient& q, const Filter& g) {
  if (&g.algebra() != &q.algebra) throw Error(ErrorKind::Usage, "filter is not a filter of this quotient");
  const Filter c = Filter::whole(q.algebra);
  if (!is_F_boolean(g, c)) throw Error(ErrorKind::NotBoolean, "filter is not Boolean in the quotient");
  const ElementSet s1 = q.preimage(g.members());
  const ElementSet s2 = q.preimage(impl_elem(g, c).members());
  const ElementSet both = s1 & s2;
  if (both.count() != 1 || !both.test(static_cast<std::size_t>(A.one()))) {
    throw Error(ErrorKind::SplitFailure, "the two preimages meet outside 1");
  }
  const auto v1 = to_vector(s1), v2 = to_vector(s2);
  Permutation out(A.size());
  for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
    std::optional<std::pair<Elem, Elem>> split;
    int count = 0;
    for (Elem x1 : v1) {
      if (!A.leq(x, x1)) continue;
      for (Elem x2 : v2) {
        const auto m = A.meet(x1, x2);
        if (m && *m == x) {
          split = std::pair{x1, x2};
          ++count;
        }
      }
    }
    if (count != 1) {
      throw Error(ErrorKind::SplitFailure, A.label(x) + " has " + std::to_string(count) + " splits, expected 1");
    }
    const auto m = A.meet(split->first, A.antipode(split->second));
    if (!m) throw Error(ErrorKind::SplitFailure, "no meet x1 ^ Delta(1, x2) for " + A.label(x));
    out[static_cast<std::size_t>(x)] = *m;
  }
  return out;
}

Elem f_ab(const CubicAlgebra& A, Elem a, Elem b, Elem w) {
  if (!A.sim(a, b)) throw Error(ErrorKind::NotSim, A.label(a) + " and " + A.label(b) + " are not sim-related");
  if (!A.leq(a, w)) throw Error(ErrorKind::Usage, A.label(w) + " is not above " + A.label(a));
  return required_meet(A, A.join(w, b), A.join(A.antipode(w), b), "f_ab");
}

Permutation f_hat_ab(const CubicAlgebra& A, Elem a, Elem b) {
  Permutation out(A.size());
  for (Elem z = 0; z < static_cast<Elem>(A.size()); ++z) {
    const Elem upper = f_ab(A, a, b, A.join(z, a));
    const Elem k = A.implies(A.join(A.antipode(z), a), a);
    const Elem lower = A.antipode(A.implies(f_ab(A, a, b, k), b));
    out[static_cast<std::size_t>(z)] = required_meet(A, upper, lower, "f_hat_ab");
  }
  return out;
}

Permutation phi_g(const CubicAlgebra& A, Elem a, Elem g) {
  const Elem h = A.implies(g, a);
  Permutation out(A.size());
  for (Elem z = 0; z < static_cast<Elem>(A.size()); ++z) {
    const Elem z0 = A.join(z, A.delta(A.join(z, g), g));
    const Elem z1 = A.join(z, A.delta(A.join(z, h), h));
    out[static_cast<std::size_t>(z)] = required_meet(A, z0, A.antipode(z1), "phi_g");
  }
  return out;
}

std::optional<Elem> int_comp(const CubicAlgebra& A, Elem a, Elem g, Elem z) {
  const Elem h = A.implies(g, a);
  return A.meet(A.join(z, A.delta(A.join(g, z), g)), A.join(z, A.delta(A.join(h, z), h)));
}

ElementSet localize_closure(const CubicAlgebra& A, const std::vector<Elem>& points,
                            const std::vector<Permutation>& generators) {
  ElementSet z = make_set(A.size(), points);
  for (bool changed = true; changed;) {
    changed = false;
    for (bool grew = true; grew;) {
      grew = false;
      const auto cur = to_vector(z);
      for (Elem x : cur) {
        for (Elem y : cur) {
          const auto c = A.caret(x, y);
          if (c && !z.test(static_cast<std::size_t>(*c))) {
            z.set(static_cast<std::size_t>(*c));
            grew = changed = true;
          }
        }
      }
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (Elem x : to_vector(z)) {
        for (const auto& phi : generators) {
          const auto y = static_cast<std::size_t>(phi.at(static_cast<std::size_t>(x)));
          if (!z.test(y)) {
            z.set(y);
            grew = changed = true;
          }
        }
      }
    }
  }
  ElementSet out = A.empty_set();
  for (Elem x : to_vector(z)) out |= localization_by_preceq(A, x);
  return out;
}

FilterFrame::FilterFrame(const CubicAlgebra& A, const Filter& f) : algebra_(&A), f_(f), members_(f.elements()) {
  require_gfilter(A, f);
  const std::size_t n = members_.size();
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> join(n * n), implies(n * n);
  std::vector<std::string> labels;
  const auto index = [&](Elem x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) throw Error(ErrorKind::Internal, "filter not closed in its own algebra");
    return static_cast<Elem>(it - members_.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(A.label(members_[i]));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = A.leq(members_[i], members_[j]) ? 1 : 0;
      join[i * n + j] = index(A.join(members_[i], members_[j]));
      implies[i * n + j] = index(A.implies(members_[i], members_[j]));
    }
  }
  ImplicationAlgebra base(n, std::move(leq), std::move(join), std::move(implies), index(A.one()), std::move(labels));
  pairs_ = std::make_unique<PairAlgebra>(build_I(base, std::max<std::size_t>(A.size(), kDefaultMaxCarrier)));
  q_m_ = std::make_unique<Quotient>(quotient_C(A));
  q_i_ = std::make_unique<Quotient>(quotient_C(pairs_->algebra));

  presentation_ = CubicHom{&A, &pairs_->algebra, {}};
  for (Elem x = 0; x < static_cast<Elem>(A.size()); ++x) {
    const Elem beta = alpha_beta(A, f_, x).second;
    const Elem first = index(A.join(A.antipode(x), beta));
    const Elem second = index(A.join(x, beta));
    const auto p = pairs_->index_of(first, second);
    if (!p) throw Error(ErrorKind::Internal, "presentation of " + A.label(x) + " is not a pair");
    presentation_.map.push_back(*p);
  }
  if (!is_isomorphism(presentation_)) throw Error(ErrorKind::Internal, "F-presentation is not an isomorphism");
  presentation_inverse_ = CubicHom{&pairs_->algebra, &A, inverse(presentation_.map)};
  c_presentation_ = functor_C_hom(*q_m_, *q_i_, presentation_);
  c_presentation_inverse_ = functor_C_hom(*q_i_, *q_m_, presentation_inverse_);
  iota_ = iota(*pairs_, *q_i_);
  iota_inverse_ = iota_inverse(*pairs_, *q_i_);
}

std::optional<Elem> FilterFrame::base_index(Elem x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return std::nullopt;
  return static_cast<Elem>(it - members_.begin());
}

Permutation FilterFrame::xi(const Permutation& alpha) const {
  if (alpha.size() != q_m_->classes.size()) throw Error(ErrorKind::Usage, "alpha is not a map on the quotient");
  Permutation out(members_.size());
  for (Elem a = 0; a < static_cast<Elem>(members_.size()); ++a) {
    const Elem cls = c_presentation_inverse_(iota_(a));
    out[static_cast<std::size_t>(a)] = iota_inverse_(c_presentation_(alpha.at(static_cast<std::size_t>(cls))));
  }
  return out;
}

Permutation FilterFrame::extend(const Permutation& chi) const {
  if (chi.size() != members_.size()) throw Error(ErrorKind::Usage, "chi is not a map on the filter");
  Permutation out(algebra_->size());
  for (Elem x = 0; x < static_cast<Elem>(algebra_->size()); ++x) {
    const auto [a, b] = pairs_->pair(presentation_(x));
    const Elem moved = pairs_->at(chi[static_cast<std::size_t>(a)], chi[static_cast<std::size_t>(b)]);
    out[static_cast<std::size_t>(x)] = presentation_inverse_(moved);
  }
  return out;
}

FilterFrame::Factoring FilterFrame::factor(const Permutation& phi) const {
  const CubicAlgebra& A = *algebra_;
  ElementSet image = A.empty_set();
  for (Elem x : members_) image.set(static_cast<std::size_t>(phi.at(static_cast<std::size_t>(x))));
  Filter g = Filter::make(A, std::move(image));
  Permutation chi = xi(functor_C_hom(*q_m_, *q_m_, CubicHom{&A, &A, phi}).map);
  const bool ok = compose(filter_automorphism(A, f_, g), extend(chi)) == phi;
  return Factoring{std::move(g), std::move(chi), ok};
}

}  // namespace mrkit
