#include "mrkit/constructions.hpp"

#include <algorithm>

#include "mrkit/axioms.hpp"
#include "mrkit/error.hpp"
#include "mrkit/localization.hpp"

namespace mrkit {

namespace {

std::vector<PairElement> pair_carrier(const ImplicationAlgebra& I) {
  std::vector<PairElement> out;
  const auto n = static_cast<Elem>(I.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (I.join(a, b) == I.one() && I.meet(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Elem required_meet(const ImplicationAlgebra& I, Elem a, Elem b) {
  const auto m = I.meet(a, b);
  if (!m) throw Error(ErrorKind::Internal, "pair Delta needs the missing meet " + I.label(a) + " ^ " + I.label(b));
  return *m;
}

CubicAlgebra pair_tables(const ImplicationAlgebra& I, const std::vector<PairElement>& pairs) {
  const std::size_t n = pairs.size();
  const auto index = [&](Elem a, Elem b) -> Elem {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), PairElement{a, b});
    if (it == pairs.end() || *it != PairElement{a, b}) {
      throw Error(ErrorKind::Internal, "pair <" + I.label(a) + "," + I.label(b) + "> outside the carrier");
    }
    return static_cast<Elem>(it - pairs.begin());
  };
  std::vector<std::uint8_t> leq(n * n);
  std::vector<Elem> join(n * n), delta(n * n, kUndefined);
  std::vector<std::string> labels;
  Elem one = kUndefined;
  for (std::size_t x = 0; x < n; ++x) {
    const auto [a, b] = pairs[x];
    labels.push_back("<" + I.label(a) + "," + I.label(b) + ">");
    if (a == I.one() && b == I.one()) one = static_cast<Elem>(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto [c, d] = pairs[y];
      const bool below = I.leq(c, a) && I.leq(d, b);
      leq[x * n + y] = I.leq(a, c) && I.leq(b, d) ? 1 : 0;
      join[x * n + y] = index(I.join(a, c), I.join(b, d));
      if (below) {
        delta[x * n + y] = index(required_meet(I, a, I.implies(b, d)), required_meet(I, b, I.implies(a, c)));
      }
    }
  }
  return CubicAlgebra(n, std::move(leq), std::move(join), std::move(delta), one, std::move(labels));
}

constexpr std::uint32_t kPlus = 0b01;
constexpr std::uint32_t kMinus = 0b10;
constexpr std::uint32_t kStar = 0b11;

}  // namespace

std::optional<Elem> PairAlgebra::index_of(Elem a, Elem b) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), PairElement{a, b});
  if (it == pairs.end() || *it != PairElement{a, b}) return std::nullopt;
  return static_cast<Elem>(it - pairs.begin());
}

Elem PairAlgebra::at(Elem a, Elem b) const {
  const auto i = index_of(a, b);
  if (!i) throw Error(ErrorKind::IndexOutOfRange, "no pair <" + base.label(a) + "," + base.label(b) + ">");
  return *i;
}

PairAlgebra build_I(const ImplicationAlgebra& base, std::size_t max_carrier) {
  auto pairs = pair_carrier(base);
  if (pairs.size() > max_carrier) {
    throw Error(ErrorKind::CapExceeded, "pair algebra has " + std::to_string(pairs.size()) + " elements, cap " +
                                            std::to_string(max_carrier));
  }
  CubicAlgebra algebra = pair_tables(base, pairs);
  return PairAlgebra{base, std::move(pairs), std::move(algebra)};
}

Elem embed_e(const PairAlgebra& pa, Elem a) {
  pa.base.check_index(a);
  return pa.at(pa.base.one(), a);
}

FacePoset face_poset(unsigned n, std::size_t max_carrier) {
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    count *= 3;
    if (count > max_carrier) {
      throw Error(ErrorKind::CapExceeded, "face poset of the " + std::to_string(n) + "-cube exceeds cap " +
                                              std::to_string(max_carrier));
    }
  }
  std::vector<std::uint32_t> codes(count);
  std::vector<std::string> labels(count);
  constexpr std::uint32_t digit_code[3] = {kPlus, kMinus, kStar};
  constexpr char digit_char[3] = {'+', '-', '*'};
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t rest = i;
    std::uint32_t code = 0;
    std::string label(n, ' ');
    for (unsigned k = n; k-- > 0;) {
      const auto digit = rest % 3;
      rest /= 3;
      code |= digit_code[digit] << (2 * k);
      label[n - 1 - k] = digit_char[digit];
    }
    codes[i] = code;
    labels[i] = n == 0 ? "()" : label;
  }
  std::vector<Elem> index_of_code(std::size_t{1} << (2 * n), kUndefined);
  for (std::size_t i = 0; i < count; ++i) index_of_code[codes[i]] = static_cast<Elem>(i);

  std::vector<std::uint8_t> leq(count * count);
  std::vector<Elem> join(count * count), delta(count * count, kUndefined);
  for (std::size_t y = 0; y < count; ++y) {
    for (std::size_t x = 0; x < count; ++x) {
      const std::uint32_t cy = codes[y], cx = codes[x];
      leq[x * count + y] = (cx & ~cy) == 0 ? 1 : 0;
      join[x * count + y] = index_of_code[cx | cy];
      if ((cx & ~cy) == 0) {
        std::uint32_t out = cx;
        for (unsigned k = 0; k < n; ++k) {
          const std::uint32_t ly = (cy >> (2 * k)) & 3, lx = (cx >> (2 * k)) & 3;
          if (ly == kStar && lx != kStar) out ^= kStar << (2 * k);
        }
        delta[y * count + x] = index_of_code[out];
      }
    }
  }
  const Elem one = index_of_code[count == 1 ? 0 : codes[count - 1]];
  CubicAlgebra algebra(count, std::move(leq), std::move(join), std::move(delta), one, std::move(labels));
  return FacePoset{n, std::move(codes), std::move(algebra)};
}

std::vector<Elem> face_to_interval(const FacePoset& faces, const PairAlgebra& interval) {
  const unsigned n = faces.dimension;
  if (interval.base.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::Usage, "interval algebra dimension does not match the face poset");
  }
  std::vector<Elem> out(faces.codes.size());
  for (std::size_t i = 0; i < faces.codes.size(); ++i) {
    Mask a = 0, b = 0;
    for (unsigned k = 0; k < n; ++k) {
      const std::uint32_t code = (faces.codes[i] >> (2 * k)) & 3;
      const Mask bit = Mask{1} << (n - 1 - k);
      if (code == kPlus) b |= bit;
      if (code == kStar) a |= bit, b |= bit;
      if (code == kMinus) a |= bit;
    }
    // base indices of a powerset algebra are the masks themselves
    out[i] = interval.at(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return out;
}

FilterAlgebra filter_algebra(const BooleanAlgebra& B, const std::vector<Mask>& F, std::size_t max_carrier) {
  auto whole = as_implication_algebra(B);
  ElementSet set = whole.algebra.empty_set();
  for (Mask m : F) {
    if (m > B.top()) throw Error(ErrorKind::NotAFilter, "mask outside the Boolean algebra");
    set.set(m);
  }
  const std::string defect = filter_defect(whole.algebra, set);
  if (!defect.empty()) throw Error(ErrorKind::NotAFilter, defect);

  PairAlgebra ambient = build_I(whole.algebra, max_carrier);
  ImplicationSubalgebra base = implication_subalgebra(B, F);
  PairAlgebra pairs = build_I(base.algebra, max_carrier);
  std::vector<Elem> embedding;
  for (const auto& [a, b] : pairs.pairs) {
    embedding.push_back(ambient.at(static_cast<Elem>(base.masks[static_cast<std::size_t>(a)]),
                                   static_cast<Elem>(base.masks[static_cast<std::size_t>(b)])));
  }
  return FilterAlgebra{std::move(ambient), std::move(base), std::move(pairs), std::move(embedding)};
}

bool presentation_check(const CubicAlgebra& A, const std::vector<Elem>& S) {
  ElementSet covered = A.empty_set();
  for (Elem a : S) covered |= localization_by_preceq(A, a);
  return covered.all();
}

std::vector<Elem> caret_chain(const CubicAlgebra& A, const std::vector<Elem>& seq) {
  std::vector<Elem> out;
  for (Elem a : seq) {
    A.check_index(a);
    if (out.empty()) {
      out.push_back(a);
      continue;
    }
    const auto c = A.caret(out.back(), a);
    if (!c) throw Error(ErrorKind::CaretUndefined, "caret undefined at (" + A.label(out.back()) + ", " + A.label(a) + ")");
    out.push_back(*c);
  }
  return out;
}

Filter gfilter_from_presentation(const CubicAlgebra& A, const std::vector<Elem>& seq, bool check_mr) {
  if (check_mr && !check_mr_axiom(A).passed) throw Error(ErrorKind::NotMR, "algebra fails the MR axiom");
  if (!presentation_check(A, seq)) throw Error(ErrorKind::NotAPresentation, "sequence does not present the algebra");
  std::vector<Elem> chain;
  try {
    chain = caret_chain(A, seq);
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("caret undefined in an MR algebra: ") + e.what());
  }
  Filter f = Filter::generated(A, make_set(A.size(), chain));
  if (!is_gfilter(A, f)) throw Error(ErrorKind::Internal, "presentation chain does not generate");
  return f;
}

}  // namespace mrkit
