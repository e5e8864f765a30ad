#pragma once

// Regular expressions compiled into a single ARef operator applied to
// letters and ∅, plus relation surgery for prefix, suffix, factor, subword
// and mirror languages.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "operalang/automaton.hpp"
#include "operalang/language.hpp"
#include "operalang/regex.hpp"
#include "operalang/relation.hpp"

namespace operalang {

/// An antireflexive relation of arity k with k leaves; nullopt is ∅.
struct FlatOperator {
  Relation relation;
  std::vector<std::optional<Symbol>> leaves;

  int arity() const { return relation.arity(); }
  friend bool operator==(const FlatOperator&, const FlatOperator&) = default;
};

/// Validates antireflexivity and the leaf count (InvariantError).
FlatOperator make_flat(Relation r, std::vector<std::optional<Symbol>> leaves);

/// `aref[k]{...}(a,_,b)`.
std::string to_string(const FlatOperator& f);
/// Accepts any operator literal with letter or `_` leaves; the root is
/// converted to its ARef relation. Throws ParseError.
FlatOperator parse_flat(std::string_view text);
FlatOperator flatten(const Expression& e);
Expression to_expression(const FlatOperator& f);

EpsilonAutomaton build_automaton(const FlatOperator& f);

// The three combinators. Each isolates the initial or final state of an
// operand (a leading or trailing ∅ slot with an ε move) only when the plain
// construction would otherwise admit extra words.
FlatOperator flat_union(const FlatOperator& l, const FlatOperator& r);
FlatOperator flat_concat(const FlatOperator& l, const FlatOperator& r);
FlatOperator flat_star(const FlatOperator& l);

/// Fresh initial state: prepends an ∅ slot and the pair (1,2).
FlatOperator isolate_initial(const FlatOperator& f);
/// Fresh final state: appends an ∅ slot and the pair (k+1,k+2).
FlatOperator isolate_final(const FlatOperator& f);
bool initial_has_incoming(const FlatOperator& f);
bool final_has_outgoing(const FlatOperator& f);

/// Structural compilation: letter -> arity 1, no pairs; ε -> {(1,2)} on ∅;
/// ∅ -> no pairs on ∅; then the combinators above.
FlatOperator compile(const RegexAst& rx);

/// States (1-based) reachable from state 1 that reach the final state along
/// at least one edge, in the automaton without its ∅ slot edges.
std::set<int> admissible_positions(const FlatOperator& f);

FlatOperator prefixes(const FlatOperator& f);
FlatOperator suffixes(const FlatOperator& f);
/// suffixes(prefixes(f)).
FlatOperator factors(const FlatOperator& f);
FlatOperator subwords(const FlatOperator& f);
FlatOperator mirror(const FlatOperator& f);

/// Applies the transform named prefixes, suffixes, factors, subwords or
/// mirror; throws InvariantError on any other name.
FlatOperator apply_transform(std::string_view name, const FlatOperator& f);

/// The five example families on leaves a1..ak, selected by number 1..5:
///   1 {(k+1,1),(1,k+1)}            (a1...ak)*
///   2 {(i,j) : i != j}             (a1+...+ak)*
///   3 {(k+1,1)} ∪ {(i,k+1)}        (a1 + a1a2 + ... + a1...ak)*
///   4 {(k+1,1)} ∪ {(1,i+1)}        (ak + a(k-1)ak + ... + a1...ak)*
///   5 {(i+1,i)}                    a1 ... ak with every step a_i a_j, j <= i+1
/// Throws InvariantError on an unknown family or k < 1.
FlatOperator builtin_family(int k, int which);
/// Accepts "1".."5" or the names star-word, star-letters, star-prefixes,
/// star-suffixes, descending.
FlatOperator builtin_family(int k, std::string_view which);

}  // namespace operalang
