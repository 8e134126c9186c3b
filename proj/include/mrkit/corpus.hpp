#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mrkit/boolean_algebra.hpp"
#include "mrkit/constructions.hpp"
#include "mrkit/filters.hpp"
#include "mrkit/functors.hpp"

namespace mrkit {

/// One algebra under test, with lazily computed derived data.
///
/// `pairs` is set when the algebra was built as I(base); the algebra is
/// then `pairs->algebra`.
class Instance {
 public:
  Instance(std::string name, std::shared_ptr<const CubicAlgebra> algebra,
           std::shared_ptr<const PairAlgebra> pairs = nullptr);

  static Instance from_pairs(std::string name, PairAlgebra pairs);
  static Instance from_algebra(std::string name, CubicAlgebra algebra);

  const std::string& name() const { return name_; }
  const CubicAlgebra& algebra() const { return *algebra_; }
  const PairAlgebra* pairs() const { return pairs_.get(); }

  bool mr() const;
  const Quotient& quotient() const;
  const std::vector<Permutation>& aut() const;
  const std::vector<Permutation>& inner() const;
  const FilterLattice& filters() const;
  /// Filters that generate the whole algebra.
  const std::vector<Filter>& gfilters() const;
  const std::vector<ElementSet>& upward_closed() const;

 private:
  struct Cache;

  std::string name_;
  std::shared_ptr<const CubicAlgebra> algebra_;
  std::shared_ptr<const PairAlgebra> pairs_;
  std::shared_ptr<Cache> cache_;
};

/// `count` implication subalgebras of B3, each the implication closure of a
/// random subset; distinct, each an ascending mask list, in draw order.
std::vector<std::vector<Mask>> random_implication_subalgebras(std::uint64_t seed, std::size_t count);

/// C1, C2, C3, N5, two filter algebras of B3 and the seeded pair algebras.
std::vector<Instance> build_corpus(std::uint64_t seed, std::size_t max_carrier = kDefaultMaxCarrier);

}  // namespace mrkit
