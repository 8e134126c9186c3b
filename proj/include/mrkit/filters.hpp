#pragma once

#include <optional>
#include <vector>

#include "mrkit/cubic_algebra.hpp"
#include "mrkit/implication_algebra.hpp"

namespace mrkit {

/// Up-closed subset containing 1 in which any two members have a meet,
/// and that meet is a member.
///
/// Holds a non-owning pointer to its algebra; the algebra must outlive it.
class Filter {
 public:
  /// Validates the filter conditions; throws NotAFilter naming the witness.
  static Filter make(const Semilattice& algebra, ElementSet members);
  static Filter make(const Semilattice& algebra, const std::vector<Elem>& members);
  static Filter principal(const Semilattice& algebra, Elem x);
  static Filter top(const Semilattice& algebra);
  static Filter whole(const Semilattice& algebra);
  /// Least filter containing the seed (and 1); NotAFilter when a needed
  /// meet does not exist.
  static Filter generated(const Semilattice& algebra, const ElementSet& seed);
  static std::optional<Filter> try_generated(const Semilattice& algebra, const ElementSet& seed);

  const Semilattice& algebra() const { return *algebra_; }
  const ElementSet& members() const { return members_; }
  bool contains(Elem x) const { return members_.test(static_cast<std::size_t>(x)); }
  std::size_t size() const { return members_.count(); }
  std::vector<Elem> elements() const { return to_vector(members_); }
  bool is_top() const { return size() == 1; }
  bool subset_of(const Filter& other) const { return members_.is_subset_of(other.members_); }

  bool operator==(const Filter& other) const { return members_ == other.members_; }
  bool operator<(const Filter& other) const { return members_ < other.members_; }

 private:
  Filter(const Semilattice* algebra, ElementSet members) : algebra_(algebra), members_(std::move(members)) {}

  const Semilattice* algebra_;
  ElementSet members_;
};

/// Reason the set fails to be a filter, or empty when it is one.
std::string filter_defect(const Semilattice& algebra, const ElementSet& set);

Filter filter_meet(const Filter& g, const Filter& h);
/// Least filter containing both; NotAFilter when there is none.
Filter filter_join(const Filter& g, const Filter& h);
std::optional<Filter> try_filter_join(const Filter& g, const Filter& h);

/// Every filter of the algebra, ascending by member bitset. Throws
/// CapExceeded above `max_carrier` elements.
std::vector<Filter> enumerate_filters(const Semilattice& algebra, std::size_t max_carrier = kDefaultMaxCarrier);

/// Delta-closure {Delta(x,y) : x, y in F, y <= x}; checked closed under
/// join and Delta (Internal otherwise).
ElementSet generated_subalgebra(const CubicAlgebra& algebra, const Filter& f);
bool is_gfilter(const CubicAlgebra& algebra, const Filter& f);

/// All filters of one algebra, enumerated once, with the filter
/// implications that quantify over them.
class FilterLattice {
 public:
  explicit FilterLattice(const Semilattice& algebra, std::size_t max_carrier = kDefaultMaxCarrier);

  const std::vector<Filter>& filters() const { return filters_; }
  const Semilattice& algebra() const { return *algebra_; }

  /// G sup F: intersection of all H with H v G = F. Throws NotSubfilter or
  /// NoWitnessFilter.
  Filter impl_sup(const Filter& g, const Filter& f) const;
  /// G => F: join of all H within F meeting G only in 1.
  Filter impl_join(const Filter& g, const Filter& f) const;

 private:
  const Semilattice* algebra_;
  std::vector<Filter> filters_;
};

/// G -> F = { h in F : h v g = 1 for all g in G }. Throws NotSubfilter.
Filter impl_elem(const Filter& g, const Filter& f);

/// G v (G -> F) = F.
bool is_F_boolean(const Filter& g, const Filter& f);
/// (G -> F) -> F = G.
bool is_weakly_F_boolean(const Filter& g, const Filter& f);
/// Some g-filter contains G, and G is H-Boolean for every such g-filter H.
bool is_boolean(const CubicAlgebra& algebra, const FilterLattice& lattice, const Filter& g);

/// Delta(G, F) = Delta(1, G -> F) v G.
Filter delta_filter(const CubicAlgebra& algebra, const Filter& g, const Filter& f);

/// [(G1 -> C) meet (G2 -> C)] v [G1 meet G2], for C-Boolean G1, G2 of the
/// implication algebra C. Throws NotBoolean.
Filter boolean_filter_sum(const Filter& g1, const Filter& g2);

}  // namespace mrkit
