#include "mrkit/boolean_algebra.hpp"

#include <algorithm>
#include <set>

#include "mrkit/error.hpp"

namespace mrkit {

namespace {
constexpr const char* kAtomNames = "pqrstuvwabcdefgh";
}

BooleanAlgebra::BooleanAlgebra(unsigned atoms, unsigned cap) : atoms_(atoms) {
  if (atoms > std::min(cap, kMaxAtoms)) {
    throw Error(ErrorKind::CapExceeded, "Boolean algebra with " + std::to_string(atoms) + " atoms exceeds cap " +
                                            std::to_string(std::min(cap, kMaxAtoms)));
  }
}

std::string BooleanAlgebra::label(Mask x) const {
  if (x == top()) return "1";
  if (x == 0) return "0";
  std::string out;
  for (unsigned i = 0; i < atoms_; ++i) {
    if (x & (Mask{1} << i)) out += kAtomNames[i];
  }
  return out;
}

Mask BooleanAlgebra::parse(const std::string& label) const {
  if (label == "1") return top();
  if (label == "0") return 0;
  Mask m = 0;
  for (char c : label) {
    const char* pos = std::char_traits<char>::find(kAtomNames, atoms_, c);
    if (!pos) throw Error(ErrorKind::Usage, "unknown atom '" + std::string(1, c) + "' in '" + label + "'");
    m |= Mask{1} << static_cast<unsigned>(pos - kAtomNames);
  }
  return m;
}

std::vector<Mask> BooleanAlgebra::elements() const {
  std::vector<Mask> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  return out;
}

std::optional<Elem> ImplicationSubalgebra::index_of(Mask m) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), m);
  if (it == masks.end() || *it != m) return std::nullopt;
  return static_cast<Elem>(it - masks.begin());
}

ImplicationSubalgebra implication_subalgebra(const BooleanAlgebra& B, const std::vector<Mask>& S) {
  std::vector<Mask> masks(S.begin(), S.end());
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (Mask m : masks) {
    if (m > B.top()) throw Error(ErrorKind::IndexOutOfRange, "mask outside the Boolean algebra");
  }
  const auto contains = [&](Mask m) { return std::binary_search(masks.begin(), masks.end(), m); };
  if (!contains(B.top())) throw Error(ErrorKind::NotClosed, "subset does not contain 1");
  for (Mask x : masks) {
    for (Mask y : masks) {
      if (!contains(B.implies(x, y))) {
        throw Error(ErrorKind::NotClosed, "not closed under -> at (" + B.label(x) + ", " + B.label(y) + ")");
      }
      if (!contains(B.join(x, y))) {
        throw Error(ErrorKind::NotClosed, "not closed under join at (" + B.label(x) + ", " + B.label(y) + ")");
      }
    }
  }
  const std::size_t n = masks.size();
  const auto index = [&](Mask m) {
    return static_cast<Elem>(std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
  };
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> join(n * n), implies(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(B.label(masks[i]));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i * n + j] = B.leq(masks[i], masks[j]) ? 1 : 0;
      join[i * n + j] = index(B.join(masks[i], masks[j]));
      implies[i * n + j] = index(B.implies(masks[i], masks[j]));
    }
  }
  ImplicationAlgebra algebra(n, std::move(leq), std::move(join), std::move(implies), index(B.top()), std::move(labels));
  return ImplicationSubalgebra{std::move(algebra), std::move(masks)};
}

ImplicationSubalgebra as_implication_algebra(const BooleanAlgebra& B) {
  return implication_subalgebra(B, B.elements());
}

std::vector<Mask> implication_closure(const BooleanAlgebra& B, const std::vector<Mask>& seed) {
  std::set<Mask> S(seed.begin(), seed.end());
  S.insert(B.top());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Mask> current(S.begin(), S.end());
    for (Mask x : current) {
      for (Mask y : current) {
        changed |= S.insert(B.implies(x, y)).second;
        changed |= S.insert(B.join(x, y)).second;
      }
    }
  }
  return {S.begin(), S.end()};
}

}  // namespace mrkit
