#pragma once

// Finite automata with ε-moves: simulation, subset construction,
// minimization, equivalence with shortest counterexamples, export.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace operalang {

using Symbol = std::string;
using Word = std::vector<Symbol>;

struct LetterEdge {
  int from = 0;
  Symbol label;
  int to = 0;

  friend auto operator<=>(const LetterEdge&, const LetterEdge&) = default;
};

struct EpsilonEdge {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const EpsilonEdge&, const EpsilonEdge&) = default;
};

/// States are numbered 0..state_count-1. Exports print them 1-based.
class EpsilonAutomaton {
 public:
  explicit EpsilonAutomaton(int state_count = 1);

  int add_state();
  void add_letter(int from, const Symbol& label, int to);
  void add_epsilon(int from, int to);
  void add_symbol(const Symbol& label) { alphabet_.insert(label); }
  void set_initial(int state);
  void add_final(int state);
  /// Copies `other` in as fresh states; returns the offset of its state 0.
  int embed(const EpsilonAutomaton& other);

  int state_count() const noexcept { return state_count_; }
  const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::set<LetterEdge>& letter_edges() const noexcept { return letters_; }
  const std::set<EpsilonEdge>& epsilon_edges() const noexcept { return epsilons_; }
  int initial() const noexcept { return initial_; }
  const std::set<int>& finals() const noexcept { return finals_; }

 private:
  void check_state(int s) const;

  int state_count_;
  std::set<Symbol> alphabet_;
  std::set<LetterEdge> letters_;
  std::set<EpsilonEdge> epsilons_;
  int initial_ = 0;
  std::set<int> finals_;
};

/// Complete deterministic automaton over a sorted alphabet.
struct Dfa {
  std::vector<Symbol> alphabet;
  std::vector<std::vector<int>> next;
  std::vector<bool> accepting;
  int initial = 0;

  int state_count() const { return static_cast<int>(next.size()); }
  friend bool operator==(const Dfa&, const Dfa&) = default;
};

std::set<int> epsilon_closure(const EpsilonAutomaton& a, const std::set<int>& states);

/// ε-closure simulation. Throws InvariantError on a letter outside the
/// automaton's alphabet.
bool accepts(const EpsilonAutomaton& a, const Word& word);

/// Subset construction over `alphabet` (defaults to the automaton's own);
/// the result is complete, with an explicit sink when needed.
Dfa determinize(const EpsilonAutomaton& a, const std::vector<Symbol>& alphabet = {});

/// Partition refinement, then breadth-first renumbering in alphabet order
/// from the initial state; equal languages give equal minimal Dfa values.
Dfa minimize(const Dfa& d);

struct EquivalenceResult {
  bool equivalent = true;
  /// Shortest distinguishing word (lexicographically least among those).
  std::optional<Word> counterexample;
};

/// Both Dfa values must share the same alphabet.
EquivalenceResult dfa_equivalent(const Dfa& a, const Dfa& b);

/// Determinizes both over the union of their alphabets, then searches the
/// product breadth-first.
EquivalenceResult language_equivalent(const EpsilonAutomaton& a, const EpsilonAutomaton& b);

/// Every accepted word of length <= max_length, ordered by length then
/// lexicographically.
std::vector<Word> accepted_words(const EpsilonAutomaton& a, int max_length);
std::vector<Word> accepted_words(const Dfa& d, int max_length);

/// Language of a Dfa as a regex in the compiler's syntax (`+` union,
/// juxtaposition, `*`, `@` for ε, `#` for ∅), by state elimination.
std::string to_regex_string(const Dfa& d);

/// "ε" for the empty word; letters concatenated when all are one character,
/// space-separated otherwise.
std::string format_word(const Word& w);

std::string to_dot(const EpsilonAutomaton& a);
/// Structural dump with fixed field order: states, alphabet, initial,
/// finals, letter_edges, epsilon_edges. States are 1-based.
std::string to_json(const EpsilonAutomaton& a);

}  // namespace operalang
