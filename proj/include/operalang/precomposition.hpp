#pragma once

// Precompositions: a graded commutative monoid equipped with shift maps
// indexed by the generators of the monoid "box" (∇_{i,k}), and the functor
// turning one into an operad (op_compose), plus quotients by an idempotent
// closure map.

#include <algorithm>
#include <compare>
#include <concepts>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "operalang/errors.hpp"
#include "operalang/relation.hpp"

namespace operalang {

/// Generator ∇_{i,k} of the box monoid.
struct BoxGenerator {
  int i = 0;
  int k = 1;

  friend auto operator<=>(const BoxGenerator&, const BoxGenerator&) = default;
};

/// A product of generators. The word g1 g2 ... gn acts as the composite
/// map g1 ∘ g2 ∘ ... ∘ gn, i.e. the rightmost generator is applied first.
using BoxWord = std::vector<BoxGenerator>;

/// Rewrites a word to a canonical representative of its class using
///   (1) ∇_{i,k} = ∇_{0,k} for i < 0,
///   (2) ∇_{i,1} = 1,
///   (4) ∇_{b+j,k} ∇_{b,k'} = ∇_{b,k+k'-1} for 0 <= j < k',
///   (3) ∇_{a,k} ∇_{b,k'} -> ∇_{b,k'} ∇_{a-k'+1,k} for a >= b+k'-1,
/// the commutation (3) being oriented so that first indices ascend from left
/// to right. Normal forms have strictly ascending first indices, all i >= 0
/// and all k >= 2. Throws InvariantError on k < 1.
BoxWord box_normalize(BoxWord word);

std::string to_string(const BoxWord& word);

template <class P>
concept Precomposition = requires(const P& p, const typename P::Carrier& s, int i, int k) {
  typename P::Carrier;
  { p.unit() } -> std::convertible_to<typename P::Carrier>;
  { p.combine(s, s) } -> std::convertible_to<typename P::Carrier>;
  { p.shift(i, k, s) } -> std::convertible_to<typename P::Carrier>;
  { p.grade(s) } -> std::convertible_to<int>;
};

/// a_s^{(k)}: a carrier element viewed as a k-ary operator.
template <class Carrier>
struct GradedElement {
  int arity = 1;
  Carrier payload{};

  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

/// Action of a whole word on a carrier element.
template <Precomposition P>
typename P::Carrier act(const P& p, const BoxWord& word, typename P::Carrier s) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = p.shift(it->i, it->k, s);
  return s;
}

template <Precomposition P>
GradedElement<typename P::Carrier> op_identity(const P& p) {
  return {1, p.unit()};
}

/// Shift on a_s^{(k)}: identity when i exceeds the element's arity.
template <Precomposition P>
typename P::Carrier guarded_shift(const P& p, int i, int k,
                                  const GradedElement<typename P::Carrier>& a) {
  return i <= a.arity ? p.shift(i, k, a.payload) : a.payload;
}

/// a ∘_i b = a^{(k+k'-1)}_{∇_{i,k'}(a) ⊕ ∇_{0,i}(b)}.
template <Precomposition P>
GradedElement<typename P::Carrier> op_compose(const P& p,
                                              const GradedElement<typename P::Carrier>& a, int i,
                                              const GradedElement<typename P::Carrier>& b) {
  if (i < 1 || i > a.arity) {
    throw ArityError("composition position " + std::to_string(i) + " outside 1.." +
                     std::to_string(a.arity));
  }
  return {a.arity + b.arity - 1,
          p.combine(guarded_shift(p, i, b.arity, a), guarded_shift(p, 0, i, b))};
}

/// Multi-tilde carrier: sets of slot intervals under union.
struct TildePrecomposition {
  using Carrier = PairSet;

  Carrier unit() const { return {}; }
  Carrier combine(const Carrier& a, const Carrier& b) const;
  Carrier shift(int i, int k, const Carrier& s) const { return shift_tilde(i, k, s); }
  /// Smallest n with s in S_n.
  int grade(const Carrier& s) const;
};

/// Antireflexive relations with x < y (ARAS) under union.
struct ArasPrecomposition {
  using Carrier = PairSet;

  Carrier unit() const { return {}; }
  Carrier combine(const Carrier& a, const Carrier& b) const;
  Carrier shift(int i, int k, const Carrier& s) const { return shift_diam(i, k, s); }
  int grade(const Carrier& s) const;
};

/// Antireflexive relations (ARef) under union.
struct ArefPrecomposition {
  using Carrier = PairSet;

  Carrier unit() const { return {}; }
  Carrier combine(const Carrier& a, const Carrier& b) const;
  Carrier shift(int i, int k, const Carrier& s) const { return shift_diam(i, k, s); }
  int grade(const Carrier& s) const;
};

/// The precomposition induced on γ-classes. Elements are stored as their
/// γ-image, so equality of classes is equality of representatives.
template <Precomposition P>
class QuotientPrecomposition {
 public:
  using Carrier = typename P::Carrier;
  using Gamma = std::function<Carrier(const Carrier&)>;

  QuotientPrecomposition(P base, Gamma gamma) : base_(std::move(base)), gamma_(std::move(gamma)) {}

  Carrier classify(const Carrier& s) const { return gamma_(s); }
  Carrier unit() const { return gamma_(base_.unit()); }
  Carrier combine(const Carrier& a, const Carrier& b) const { return gamma_(base_.combine(a, b)); }
  Carrier shift(int i, int k, const Carrier& s) const { return gamma_(base_.shift(i, k, s)); }
  int grade(const Carrier& s) const { return base_.grade(s); }

  const P& base() const noexcept { return base_; }

 private:
  P base_;
  Gamma gamma_;
};

/// Builds the quotient of `p` by `gamma` after checking, on the supplied
/// sample elements, that gamma is idempotent, does not raise the grade,
/// commutes with every shift ∇_{i,k} (i in -1..grade+1, k in 1..3) and is a
/// congruence for the monoid product. Throws InvariantError naming the
/// first witness that violates a precondition.
template <Precomposition P>
QuotientPrecomposition<P> op_quotient(
    const P& p, typename QuotientPrecomposition<P>::Gamma gamma,
    const std::vector<GradedElement<typename P::Carrier>>& samples) {
  using std::to_string;
  for (const auto& a : samples) {
    const auto ga = gamma(a.payload);
    if (gamma(ga) != ga) {
      throw InvariantError("gamma is not idempotent on " + to_string(a.payload));
    }
    if (p.grade(ga) > std::max(p.grade(a.payload), 1)) {
      throw InvariantError("gamma raises the grade of " + to_string(a.payload));
    }
    for (int i = -1; i <= p.grade(a.payload) + 1; ++i) {
      for (int k = 1; k <= 3; ++k) {
        if (gamma(p.shift(i, k, a.payload)) != p.shift(i, k, ga)) {
          throw InvariantError("gamma does not commute with shift(" + to_string(i) + "," +
                               to_string(k) + ") on " + to_string(a.payload));
        }
      }
    }
    for (const auto& b : samples) {
      if (gamma(p.combine(ga, gamma(b.payload))) != gamma(p.combine(a.payload, b.payload))) {
        throw InvariantError("gamma is not a congruence on " + to_string(a.payload) + " and " +
                             to_string(b.payload));
      }
    }
  }
  return QuotientPrecomposition<P>(p, std::move(gamma));
}

/// Transitive closure of a bare pair set (over the points it mentions).
PairSet close_transitively(const PairSet& pairs);

/// Transitive closure with the diagonal removed; the class map on ARef.
PairSet close_strictly(const PairSet& pairs);

}  // namespace operalang
