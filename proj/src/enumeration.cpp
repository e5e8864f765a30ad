#include "operalang/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "operalang/errors.hpp"
#include "operalang/language.hpp"
#include "operalang/literal.hpp"

namespace operalang {

namespace {

using Rows = std::vector<std::uint32_t>;  // rows[i] bit j  <=>  (i+1, j+1)

bool transitive(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j)
      if ((rows[i] >> j & 1u) && (rows[j] & ~rows[i])) return false;
  }
  return true;
}

QuasiOrder to_order(const Rows& rows) {
  PairSet pairs;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] >> j & 1u) pairs.insert({i + 1, j + 1});
  return QuasiOrder(Relation(n - 1, std::move(pairs)));
}

void check_guard(int k, bool allow_override) {
  if (k < 1) throw InvariantError("enumeration arity must be positive");
  if (k > kEnumerationCeiling) {
    throw InvariantError("enumeration beyond k = " + std::to_string(kEnumerationCeiling) +
                         " is not supported");
  }
  if (k > kEnumerationGuard && !allow_override) {
    throw InvariantError("k = " + std::to_string(k) + " exceeds the guard k <= " +
                         std::to_string(kEnumerationGuard) + "; pass the override to proceed");
  }
}

std::vector<QuasiOrder> sorted(std::vector<QuasiOrder> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<QuasiOrder> enumerate_qoset_by_filter(int k) {
  if (k < 1 || k > 4) throw InvariantError("filter enumeration supports 1 <= k <= 4");
  const int n = k + 1;
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off.push_back({i, j});
  std::vector<QuasiOrder> out;
  Rows rows(n);
  const std::uint32_t limit = 1u << off.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    for (int i = 0; i < n; ++i) rows[i] = 1u << i;
    for (std::size_t b = 0; b < off.size(); ++b)
      if (mask >> b & 1u) rows[off[b].first] |= 1u << off[b].second;
    if (transitive(rows)) out.push_back(to_order(rows));
  }
  return sorted(std::move(out));
}

std::vector<QuasiOrder> enumerate_qoset(int k, bool allow_override) {
  check_guard(k, allow_override);
  if (k <= 4) return enumerate_qoset_by_filter(k);
  // Beyond the filter's reach: extend each quasiorder on n-1 points by a new
  // point with a chosen down-set and up-set, keeping transitive results.
  std::vector<Rows> layer;
  for (const auto& q : enumerate_qoset_by_filter(4)) {
    Rows rows(5, 0);
    for (const auto& [x, y] : q.relation().pairs()) rows[x - 1] |= 1u << (y - 1);
    layer.push_back(rows);
  }
  const int old = 5;
  std::vector<QuasiOrder> out;
  for (const auto& base : layer) {
    for (std::uint32_t up = 0; up < (1u << old); ++up) {      // new point -> up
      for (std::uint32_t down = 0; down < (1u << old); ++down) {  // down -> new point
        Rows rows(base);
        rows.push_back(up | 1u << old);
        for (int i = 0; i < old; ++i)
          if (down >> i & 1u) rows[i] |= 1u << old;
        if (transitive(rows)) out.push_back(to_order(rows));
      }
    }
  }
  return sorted(std::move(out));
}

Census census(int k, std::vector<Symbol> letters) {
  if (k < 1 || k > 3) throw InvariantError("census supports 1 <= k <= 3");
  if (letters.empty()) {
    for (int i = 1; i <= k; ++i) letters.push_back("a" + std::to_string(i));
  }
  if (static_cast<int>(letters.size()) != k) throw ArityError("census needs one letter per slot");
  std::vector<Leaf> leaves;
  for (const auto& l : letters) leaves.push_back(Leaf::of_letter(l));
  std::vector<Symbol> alphabet(letters);
  Census c{k, letters, {}};
  for (auto& q : enumerate_qoset(k)) {
    const Dfa d = minimize(determinize(build_automaton(strip_diagonal(q.relation()), leaves), alphabet));
    c.entries.push_back({std::move(q), d, to_regex_string(d)});
  }
  return c;
}

bool entries_pairwise_distinct(const Census& c) {
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<bool>>> seen;
  for (const auto& e : c.entries)
    if (!seen.insert({e.automaton.next, e.automaton.accepting}).second) return false;
  return true;
}

Word witness_word(int k, Pair p) {
  Word w;
  for (int s = 1; s < p.x; ++s) w.push_back("a" + std::to_string(s));
  for (int s = p.y; s <= k; ++s) w.push_back("a" + std::to_string(s));
  return w;
}

Word faithfulness_witness(const QuasiOrder& q1, const QuasiOrder& q2) {
  const int k = q1.arity();
  auto first_difference = [](const QuasiOrder& a, const QuasiOrder& b) -> std::optional<Pair> {
    for (const auto& p : a.relation().pairs())
      if (!b.relation().contains(p)) return p;
    return std::nullopt;
  };
  auto diff = first_difference(q1, q2);
  if (!diff) diff = first_difference(q2, q1);
  if (!diff) throw InvariantError("witness requested for equal quasiorders");
  return witness_word(k, *diff);
}

FaithfulnessReport verify_faithfulness(int k) {
  if (k < 1 || k > 3) throw InvariantError("faithfulness check supports 1 <= k <= 3");
  const auto orders = enumerate_qoset(k);
  const auto leaves = slot_leaves(k);
  std::vector<Symbol> alphabet;
  for (int i = 1; i <= k; ++i) alphabet.push_back("a" + std::to_string(i));

  std::vector<EpsilonAutomaton> automata;
  std::vector<Dfa> dfas;
  for (const auto& q : orders) {
    automata.push_back(build_automaton(strip_diagonal(q.relation()), leaves));
    dfas.push_back(minimize(determinize(automata.back(), alphabet)));
  }
  FaithfulnessReport report;
  report.arity = k;
  report.orders = static_cast<long long>(orders.size());
  auto note = [&](const std::string& what, std::size_t a, std::size_t b) {
    if (report.problems.size() < 10) {
      report.problems.push_back(what + ": " + to_literal(orders[a]) + " vs " + to_literal(orders[b]));
    }
  };
  for (std::size_t a = 0; a < orders.size(); ++a) {
    for (std::size_t b = a + 1; b < orders.size(); ++b) {
      ++report.pairs_checked;
      const Word w = faithfulness_witness(orders[a], orders[b]);
      report.max_witness_length = std::max(report.max_witness_length, static_cast<int>(w.size()));
      if (accepts(automata[a], w) == accepts(automata[b], w)) {
        ++report.witness_failures;
        note("witness " + format_word(w) + " does not separate", a, b);
      }
      const auto eq = dfa_equivalent(dfas[a], dfas[b]);
      if (eq.equivalent) {
        ++report.equivalent_pairs;
        note("same language", a, b);
        continue;
      }
      const int len = static_cast<int>(eq.counterexample->size());
      report.max_counterexample_length = std::max(report.max_counterexample_length, len);
      if (len > k) ++report.counterexamples_longer_than_arity;
    }
  }
  return report;
}

}  // namespace operalang
