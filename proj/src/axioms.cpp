#include "mrkit/axioms.hpp"

#include <algorithm>
#include <functional>

#include "mrkit/cubic_algebra.hpp"
#include "mrkit/error.hpp"

namespace mrkit {

namespace {

using Opt = std::optional<Elem>;

// Guarded term evaluation: any undefined subterm yields nullopt.
struct Terms {
  const CubicAlgebra& A;

  bool leq(Opt x, Opt y) const { return x && y && A.leq(*x, *y); }
  Opt join(Opt x, Opt y) const {
    if (!x || !y) return std::nullopt;
    return A.join(*x, *y);
  }
  Opt delta(Opt x, Opt y) const {
    if (!x || !y) return std::nullopt;
    return A.try_delta(*x, *y);
  }
  Opt implies(Opt x, Opt y) const { return join(delta(A.one(), delta(join(x, y), y)), y); }
};

bool eq(Opt a, Opt b) { return a && b && *a == *b; }

struct Axiom {
  const char* id;
  int arity;
  // true when the tuple satisfies the axiom (or its hypothesis is false)
  std::function<bool(const CubicAlgebra&, const Elem*)> holds;
};

const std::vector<Axiom>& cubic_axioms() {
  static const std::vector<Axiom> axioms = {
      {"order-reflexive", 1, [](const CubicAlgebra& A, const Elem* v) { return A.leq(v[0], v[0]); }},
      {"order-antisymmetric", 2,
       [](const CubicAlgebra& A, const Elem* v) { return v[0] == v[1] || !(A.leq(v[0], v[1]) && A.leq(v[1], v[0])); }},
      {"order-transitive", 3,
       [](const CubicAlgebra& A, const Elem* v) {
         return !(A.leq(v[0], v[1]) && A.leq(v[1], v[2])) || A.leq(v[0], v[2]);
       }},
      {"join-upper", 2,
       [](const CubicAlgebra& A, const Elem* v) {
         const Elem j = A.join(v[0], v[1]);
         return A.leq(v[0], j) && A.leq(v[1], j);
       }},
      {"join-least", 3,
       [](const CubicAlgebra& A, const Elem* v) {
         return !(A.leq(v[0], v[2]) && A.leq(v[1], v[2])) || A.leq(A.join(v[0], v[1]), v[2]);
       }},
      {"one-top", 1, [](const CubicAlgebra& A, const Elem* v) { return A.leq(v[0], A.one()); }},
      {"a", 2,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Elem x = v[0], y = v[1];
         if (!A.leq(x, y)) return true;
         return eq(t.join(t.delta(y, x), x), y);
       }},
      {"b", 3,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Elem x = v[0], y = v[1], z = v[2];
         if (!(A.leq(x, y) && A.leq(y, z))) return true;
         return eq(t.delta(z, t.delta(y, x)), t.delta(t.delta(z, y), t.delta(z, x)));
       }},
      {"c", 2,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Elem x = v[0], y = v[1];
         if (!A.leq(x, y)) return true;
         return eq(t.delta(y, t.delta(y, x)), x);
       }},
      {"d", 3,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Elem x = v[0], y = v[1], z = v[2];
         if (!(A.leq(x, y) && A.leq(y, z))) return true;
         return t.leq(t.delta(z, x), t.delta(z, y));
       }},
      {"e", 2,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Opt x = v[0], y = v[1];
         return eq(t.implies(t.implies(x, y), y), t.join(x, y));
       }},
      {"f", 3,
       [](const CubicAlgebra& A, const Elem* v) {
         const Terms t{A};
         const Opt x = v[0], y = v[1], z = v[2];
         return eq(t.implies(x, t.implies(y, z)), t.implies(y, t.implies(x, z)));
       }},
  };
  return axioms;
}

bool mr_holds(const CubicAlgebra& A, const Elem* v) {
  const Elem x = v[0], a = v[1], b = v[2];
  if (!(A.less(a, x) && A.less(b, x))) return true;
  const Terms t{A};
  const Opt lhs = t.join(t.delta(x, a), b);
  if (!lhs) return false;
  const bool strictly_below = A.less(*lhs, x);
  const bool meet_missing = !A.meet(a, b).has_value();
  return strictly_below == meet_missing;
}

// Walks all tuples of the given arity in lexicographic order.
template <typename Pred>
void scan(std::size_t n, int arity, WitnessPolicy policy, const char* id, Pred&& holds, AxiomReport& report) {
  std::vector<Elem> v(static_cast<std::size_t>(arity), 0);
  const auto total = [&] {
    std::size_t t = 1;
    for (int i = 0; i < arity; ++i) t *= n;
    return t;
  }();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = arity - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<Elem>(c % n);
      c /= n;
    }
    if (!holds(v.data())) {
      report.add(id, v);
      if (policy == WitnessPolicy::First) return;
    }
  }
}

}  // namespace

bool AxiomReport::mentions(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

AxiomReport check_cubic_axioms(const CubicAlgebra& A, WitnessPolicy policy) {
  AxiomReport report;
  const std::size_t n = A.size();
  for (const Axiom& ax : cubic_axioms()) {
    // The ordered triples of b and d are sparse; restrict the walk to chains.
    if (std::string_view(ax.id) == "b" || std::string_view(ax.id) == "d") {
      bool stop = false;
      for (std::size_t x = 0; x < n && !stop; ++x) {
        const ElementSet& ux = A.up_set(static_cast<Elem>(x));
        for (auto y = ux.find_first(); y != ElementSet::npos && !stop; y = ux.find_next(y)) {
          const ElementSet& uy = A.up_set(static_cast<Elem>(y));
          for (auto z = uy.find_first(); z != ElementSet::npos && !stop; z = uy.find_next(z)) {
            const Elem v[3] = {static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)};
            if (!ax.holds(A, v)) {
              report.add(ax.id, {v[0], v[1], v[2]});
              stop = policy == WitnessPolicy::First;
            }
          }
        }
      }
      continue;
    }
    scan(n, ax.arity, policy, ax.id, [&](const Elem* v) { return ax.holds(A, v); }, report);
  }
  return report;
}

AxiomReport check_mr_axiom(const CubicAlgebra& A, WitnessPolicy policy) {
  AxiomReport report;
  scan(A.size(), 3, policy, "mr", [&](const Elem* v) { return mr_holds(A, v); }, report);
  return report;
}

std::optional<std::pair<Elem, Elem>> first_caret_failure(const CubicAlgebra& A) {
  const auto n = static_cast<Elem>(A.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!A.caret(x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool caret_total(const CubicAlgebra& A) { return !first_caret_failure(A).has_value(); }

bool replay_violation(const CubicAlgebra& A, const Violation& violation) {
  for (const Elem x : violation.witness) {
    if (!A.valid_index(x)) return false;
  }
  if (violation.axiom == "mr") {
    return violation.witness.size() == 3 && !mr_holds(A, violation.witness.data());
  }
  for (const Axiom& ax : cubic_axioms()) {
    if (violation.axiom == ax.id) {
      return violation.witness.size() == static_cast<std::size_t>(ax.arity) && !ax.holds(A, violation.witness.data());
    }
  }
  throw Error(ErrorKind::Internal, "unknown axiom id " + violation.axiom);
}

std::string format_witness(const Semilattice& A, const std::vector<Elem>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += A.valid_index(witness[i]) ? A.label(witness[i]) : std::to_string(witness[i]);
  }
  return out + ")";
}

}  // namespace mrkit
