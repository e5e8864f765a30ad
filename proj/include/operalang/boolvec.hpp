#pragma once

// The operad of sets of boolean vectors and its bridge to multi-tildes.

#include <cstdint>
#include <set>
#include <vector>

#include "operalang/automaton.hpp"
#include "operalang/relation.hpp"

namespace operalang {

using BoolVector = std::vector<std::uint8_t>;

class BoolVectorSet {
 public:
  BoolVectorSet() = default;
  /// Throws InvariantError unless every vector has length `arity` and
  /// entries in {0, 1}.
  BoolVectorSet(int arity, std::set<BoolVector> vectors);

  int arity() const noexcept { return arity_; }
  const std::set<BoolVector>& vectors() const noexcept { return vectors_; }

  friend auto operator<=>(const BoolVectorSet&, const BoolVectorSet&) = default;

 private:
  int arity_ = 1;
  std::set<BoolVector> vectors_;
};

/// E ∘_k F: splice e_k * f into position k, for every e in E and f in F.
/// Throws ArityError unless 1 <= k <= E.arity.
BoolVectorSet bool_compose(const BoolVectorSet& e, int k, const BoolVectorSet& f);

/// Unit: {[1]}.
BoolVectorSet bool_identity();

/// V(T): the 0/1 vector of every subset of pairwise disjoint intervals of
/// T, with 0 on covered slots.
BoolVectorSet tilde_to_vectors(const MultiTilde& t);

/// Smallest superset closed under (i,j),(j+1,l) => (i,l).
MultiTilde closed_normal_form(const MultiTilde& t);

/// Vectors derived by the 0/1 grammar of T: from slot i either emit 1 and
/// move to i+1, or for a tilde (i,y) emit y-i+1 zeros and move to y+1.
std::set<BoolVector> l01_language(const MultiTilde& t);

/// Automaton for the action of E on letters: the union over e in E of the
/// words keeping exactly the letters at positions with e_i = 1.
EpsilonAutomaton bool_action(const BoolVectorSet& e, const std::vector<Symbol>& letters);

/// Checks, on slot letters a1..ak, that the action of V(T) equals the
/// grammar action of (T, ∅), and that T and its closed normal form have the
/// same 0/1 language.
bool tilde_action_agreement(const MultiTilde& t);

}  // namespace operalang
