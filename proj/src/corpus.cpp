#include "mrkit/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "mrkit/automorphism_search.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/inner.hpp"
#include "mrkit/subalgebra.hpp"

namespace mrkit {

struct Instance::Cache {
  std::optional<bool> mr;
  std::unique_ptr<Quotient> quotient;
  std::optional<std::vector<Permutation>> aut;
  std::optional<std::vector<Permutation>> inner;
  std::unique_ptr<FilterLattice> filters;
  std::optional<std::vector<Filter>> gfilters;
  std::optional<std::vector<ElementSet>> upward_closed;
};

Instance::Instance(std::string name, std::shared_ptr<const CubicAlgebra> algebra,
                   std::shared_ptr<const PairAlgebra> pairs)
    : name_(std::move(name)), algebra_(std::move(algebra)), pairs_(std::move(pairs)),
      cache_(std::make_shared<Cache>()) {}

Instance Instance::from_pairs(std::string name, PairAlgebra pairs) {
  auto owned = std::make_shared<const PairAlgebra>(std::move(pairs));
  std::shared_ptr<const CubicAlgebra> algebra(owned, &owned->algebra);
  return Instance(std::move(name), std::move(algebra), std::move(owned));
}

Instance Instance::from_algebra(std::string name, CubicAlgebra algebra) {
  return Instance(std::move(name), std::make_shared<const CubicAlgebra>(std::move(algebra)));
}

bool Instance::mr() const {
  if (!cache_->mr) cache_->mr = check_mr_axiom(*algebra_).passed;
  return *cache_->mr;
}

const Quotient& Instance::quotient() const {
  if (!cache_->quotient) cache_->quotient = std::make_unique<Quotient>(quotient_C(*algebra_));
  return *cache_->quotient;
}

const std::vector<Permutation>& Instance::aut() const {
  if (!cache_->aut) cache_->aut = enumerate_aut(*algebra_);
  return *cache_->aut;
}

const std::vector<Permutation>& Instance::inner() const {
  if (!cache_->inner) cache_->inner = inner_group(*algebra_, aut()).inner;
  return *cache_->inner;
}

const FilterLattice& Instance::filters() const {
  if (!cache_->filters) cache_->filters = std::make_unique<FilterLattice>(*algebra_);
  return *cache_->filters;
}

const std::vector<Filter>& Instance::gfilters() const {
  if (!cache_->gfilters) {
    std::vector<Filter> out;
    for (const Filter& f : filters().filters())
      if (is_gfilter(*algebra_, f)) out.push_back(f);
    cache_->gfilters = std::move(out);
  }
  return *cache_->gfilters;
}

const std::vector<ElementSet>& Instance::upward_closed() const {
  if (!cache_->upward_closed) cache_->upward_closed = enumerate_upward_closed_subalgebras(*algebra_);
  return *cache_->upward_closed;
}

std::vector<std::vector<Mask>> random_implication_subalgebras(std::uint64_t seed, std::size_t count) {
  const BooleanAlgebra b3(3);
  std::mt19937_64 rng(seed);
  std::set<std::vector<Mask>> seen;
  std::vector<std::vector<Mask>> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 1000; ++attempt) {
    std::vector<Mask> picks;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) picks.push_back(static_cast<Mask>(rng() % b3.size()));
    std::vector<Mask> closed = implication_closure(b3, picks);
    std::sort(closed.begin(), closed.end());
    if (closed.size() < 2 || !seen.insert(closed).second) continue;
    out.push_back(std::move(closed));
  }
  return out;
}

std::vector<Instance> build_corpus(std::uint64_t seed, std::size_t max_carrier) {
  std::vector<Instance> out;
  for (unsigned n = 1; n <= 3; ++n)
    out.push_back(Instance::from_pairs("C" + std::to_string(n),
                                       build_I(as_implication_algebra(BooleanAlgebra(n)).algebra, max_carrier)));

  const BooleanAlgebra b2(2);
  out.push_back(Instance::from_pairs("N5", build_I(implication_subalgebra(b2, {0b01, 0b10, 0b11}).algebra, max_carrier)));

  const BooleanAlgebra b3(3);
  for (Mask g : {Mask{0b100}, Mask{0b011}}) {
    std::vector<Mask> f;
    for (Mask m : b3.elements())
      if ((m & g) == g) f.push_back(m);
    out.push_back(Instance::from_pairs("I([" + b3.label(g) + ",1]<=B3)", filter_algebra(b3, f, max_carrier).pairs));
  }

  std::size_t i = 0;
  for (const auto& masks : random_implication_subalgebras(seed, 5)) {
    std::string name = "I(rand" + std::to_string(i++) + "{";
    for (std::size_t j = 0; j < masks.size(); ++j) name += (j ? "," : "") + b3.label(masks[j]);
    out.push_back(Instance::from_pairs(name + "})", build_I(implication_subalgebra(b3, masks).algebra, max_carrier)));
  }
  return out;
}

}  // namespace mrkit
