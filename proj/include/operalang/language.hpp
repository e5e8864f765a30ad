#pragma once

// Operators acting on languages: right-linear grammars, ε-automata of
// operator expressions, and the action on automata.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "operalang/automaton.hpp"
#include "operalang/operads.hpp"

namespace operalang {

/// One rule of a right-linear grammar over nonterminals S_1..S_{k+1}:
///   letter rule  S_from -> a_from S_{from+1}
///   chain rule   S_from -> S_to
///   ε rule       S_from -> ε
struct Production {
  enum class Kind { Letter, Chain, Epsilon };
  Kind kind = Kind::Epsilon;
  int from = 1;
  int to = 0;

  friend auto operator<=>(const Production&, const Production&) = default;
};

std::string to_string(const Production& p);

/// Letter rules ascending, chain rules in pair order, then the ε rule.
/// Requires an antireflexive relation.
std::vector<Production> emit_grammar(const Relation& r);
/// Grammar of a double multi-tilde: S_i -> S_j when (j, i-1) is a right
/// tilde or (i, j-1) is a left tilde.
std::vector<Production> emit_grammar_double(const DoubleTilde& d);

struct Expression;

/// A leaf of an operator expression: a letter, ∅, or a nested expression.
struct Leaf {
  enum class Kind { Letter, Empty, Sub };
  Kind kind = Kind::Empty;
  Symbol letter;
  std::shared_ptr<const Expression> sub;

  static Leaf of_letter(Symbol s);
  static Leaf empty();
  static Leaf of_expression(Expression e);
};

struct Expression {
  OperadElement root;
  std::vector<Leaf> leaves;
};

/// Leaves a1, ..., ak.
std::vector<Leaf> slot_leaves(int k);

/// `literal(leaf, ...)` where a leaf is a letter name, `_` (or ∅) for the
/// empty language, or a nested expression. Without a leaf list the slots
/// default to a1..ak. Throws ParseError.
Expression parse_expression(std::string_view text);
std::string to_string(const Expression& e);

/// ε-automaton of the operator applied to its leaves: states 1..k+1,
/// letter edge i -> i+1 per letter slot, ε edge per pair, nested
/// expressions glued in with ε moves. Throws ArityError when the leaf
/// count differs from the arity.
EpsilonAutomaton build_automaton(const Expression& e);
EpsilonAutomaton build_automaton(const Relation& aref, const std::vector<Leaf>& leaves);

/// Substitutes the i-th automaton for slot i.
EpsilonAutomaton act_on_languages(const OperadElement& e, const std::vector<EpsilonAutomaton>& languages);

/// Automaton accepting exactly the one-letter word `letter`.
EpsilonAutomaton letter_automaton(const Symbol& letter);

}  // namespace operalang
