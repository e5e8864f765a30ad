#include "operalang/boolvec.hpp"

#include <functional>

#include "operalang/errors.hpp"
#include "operalang/language.hpp"
#include "operalang/operads.hpp"

namespace operalang {

BoolVectorSet::BoolVectorSet(int arity, std::set<BoolVector> vectors)
    : arity_(arity), vectors_(std::move(vectors)) {
  if (arity_ < 1) throw InvariantError("boolean vector set needs arity >= 1");
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != arity_) throw InvariantError("boolean vector of wrong length");
    for (auto b : v)
      if (b > 1) throw InvariantError("boolean vector entry outside {0,1}");
  }
}

BoolVectorSet bool_compose(const BoolVectorSet& e, int k, const BoolVectorSet& f) {
  if (k < 1 || k > e.arity()) {
    throw ArityError("composition position " + std::to_string(k) + " outside 1.." +
                     std::to_string(e.arity()));
  }
  std::set<BoolVector> out;
  for (const auto& u : e.vectors()) {
    for (const auto& v : f.vectors()) {
      BoolVector w(u.begin(), u.begin() + (k - 1));
      for (auto b : v) w.push_back(static_cast<std::uint8_t>(u[k - 1] & b));
      w.insert(w.end(), u.begin() + k, u.end());
      out.insert(std::move(w));
    }
  }
  return BoolVectorSet(e.arity() + f.arity() - 1, std::move(out));
}

BoolVectorSet bool_identity() { return BoolVectorSet(1, {BoolVector{1}}); }

BoolVectorSet tilde_to_vectors(const MultiTilde& t) {
  const std::vector<Pair> pairs(t.pairs().begin(), t.pairs().end());
  std::set<BoolVector> out;
  BoolVector current(t.arity(), 1);
  // Pairs are sorted by start, so disjointness only needs the last cover end.
  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int covered_to) {
    out.insert(current);
    for (std::size_t i = from; i < pairs.size(); ++i) {
      const auto [x, y] = pairs[i];
      if (x <= covered_to) continue;
      for (int s = x; s <= y; ++s) current[s - 1] = 0;
      choose(i + 1, y);
      for (int s = x; s <= y; ++s) current[s - 1] = 1;
    }
  };
  choose(0, 0);
  return BoolVectorSet(t.arity(), std::move(out));
}

MultiTilde closed_normal_form(const MultiTilde& t) {
  PairSet pairs = t.pairs();
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [i, j] : PairSet(pairs)) {
      for (const auto& [a, l] : PairSet(pairs)) {
        if (a == j + 1 && pairs.insert({i, l}).second) grew = true;
      }
    }
  }
  return MultiTilde(t.arity(), std::move(pairs));
}

std::set<BoolVector> l01_language(const MultiTilde& t) {
  const int k = t.arity();
  std::set<BoolVector> out;
  BoolVector current;
  std::function<void(int)> derive = [&](int i) {
    if (i == k + 1) {
      out.insert(current);
      return;
    }
    current.push_back(1);
    derive(i + 1);
    current.pop_back();
    for (const auto& [x, y] : t.pairs()) {
      if (x != i) continue;
      current.insert(current.end(), y - x + 1, 0);
      derive(y + 1);
      current.resize(current.size() - (y - x + 1));
    }
  };
  derive(1);
  return out;
}

EpsilonAutomaton bool_action(const BoolVectorSet& e, const std::vector<Symbol>& letters) {
  if (static_cast<int>(letters.size()) != e.arity()) {
    throw ArityError("boolean vector action needs one letter per position");
  }
  EpsilonAutomaton a(2);
  a.set_initial(0);
  a.add_final(1);
  for (const auto& l : letters) a.add_symbol(l);
  for (const auto& v : e.vectors()) {
    int at = 0;
    for (int i = 0; i < e.arity(); ++i) {
      if (!v[i]) continue;
      const int s = a.add_state();
      a.add_letter(at, letters[i], s);
      at = s;
    }
    a.add_epsilon(at, 1);
  }
  return a;
}

bool tilde_action_agreement(const MultiTilde& t) {
  const int k = t.arity();
  std::vector<Symbol> letters;
  for (int i = 1; i <= k; ++i) letters.push_back("a" + std::to_string(i));
  const EpsilonAutomaton by_vectors = bool_action(tilde_to_vectors(t), letters);
  const EpsilonAutomaton by_grammar =
      build_automaton(iso_xi(DoubleTilde(t, MultiTilde(k, {}))), slot_leaves(k));
  if (!language_equivalent(by_vectors, by_grammar).equivalent) return false;
  return l01_language(closed_normal_form(t)) == l01_language(t);
}

}  // namespace operalang
