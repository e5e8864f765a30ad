#pragma once

// Exhaustive generation of quasiorders, the census of the languages they
// denote, and a machine check that distinct quasiorders denote distinct
// languages.

#include <string>
#include <vector>

#include "operalang/automaton.hpp"
#include "operalang/operads.hpp"

namespace operalang {

/// Largest arity enumerated without the override flag.
inline constexpr int kEnumerationGuard = 4;
/// Hard ceiling even with the override.
inline constexpr int kEnumerationCeiling = 5;

/// All quasiorders on {1, ..., k+1}, in ascending relation order.
/// Throws InvariantError when k < 1, or k exceeds the guard and
/// `allow_override` is false, or k exceeds the ceiling.
std::vector<QuasiOrder> enumerate_qoset(int k, bool allow_override = false);

/// Same result by filtering every off-diagonal subset for transitivity.
/// Practical up to k = 4; used as the reference generator.
std::vector<QuasiOrder> enumerate_qoset_by_filter(int k);

struct CensusEntry {
  QuasiOrder order;
  Dfa automaton;      // minimal, canonically numbered
  std::string regex;  // state-elimination rendering of the language
};

struct Census {
  int arity = 1;
  std::vector<Symbol> letters;
  std::vector<CensusEntry> entries;
};

/// Letters default to a1..ak. Requires k <= 3.
Census census(int k, std::vector<Symbol> letters = {});

/// True when no two entries have the same minimal automaton.
bool entries_pairwise_distinct(const Census& c);

/// The word a1 ... a(i-1) aj ... ak over slot letters.
Word witness_word(int k, Pair p);

/// witness_word for the lexicographically least (i,j)
/// in Q1 \ Q2, or in Q2 \ Q1 when the first difference is empty.
Word faithfulness_witness(const QuasiOrder& q1, const QuasiOrder& q2);

struct FaithfulnessReport {
  int arity = 1;
  long long orders = 0;
  long long pairs_checked = 0;
  long long equivalent_pairs = 0;    // pairs denoting the same language
  long long witness_failures = 0;    // constructed witness fails to separate
  int max_witness_length = 0;
  int max_counterexample_length = 0;  // over shortest distinguishing words
  long long counterexamples_longer_than_arity = 0;
  std::vector<std::string> problems;  // first few offending pairs

  /// Every pair distinguished, and every constructed witness separates.
  bool faithful() const { return equivalent_pairs == 0 && witness_failures == 0; }
  /// Every shortest distinguishing word has length <= arity.
  bool counterexamples_within_arity() const { return counterexamples_longer_than_arity == 0; }
};

/// Requires k <= 3.
FaithfulnessReport verify_faithfulness(int k);

}  // namespace operalang
