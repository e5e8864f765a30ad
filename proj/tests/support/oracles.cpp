#include "oracles.hpp"

#include <deque>
#include <functional>
#include <map>

namespace oracle {

namespace {

struct Frag {
  int start;
  int end;
};

Frag build(const RegexAst& rx, EpsilonAutomaton& a) {
  using K = RegexAst::Kind;
  const int s = a.add_state();
  const int f = a.add_state();
  switch (rx.kind) {
    case K::Letter: a.add_letter(s, rx.letter, f); break;
    case K::Epsilon: a.add_epsilon(s, f); break;
    case K::EmptySet: break;
    case K::Union: {
      const Frag l = build(*rx.left, a);
      const Frag r = build(*rx.right, a);
      a.add_epsilon(s, l.start);
      a.add_epsilon(s, r.start);
      a.add_epsilon(l.end, f);
      a.add_epsilon(r.end, f);
      break;
    }
    case K::Concat: {
      const Frag l = build(*rx.left, a);
      const Frag r = build(*rx.right, a);
      a.add_epsilon(s, l.start);
      a.add_epsilon(l.end, r.start);
      a.add_epsilon(r.end, f);
      break;
    }
    case K::Star: {
      const Frag in = build(*rx.left, a);
      a.add_epsilon(s, in.start);
      a.add_epsilon(in.end, in.start);
      a.add_epsilon(in.end, f);
      a.add_epsilon(s, f);
      break;
    }
  }
  return {s, f};
}

// Plain NFA bookkeeping, independent of the library's simulation.
struct Graph {
  int n;
  std::vector<std::vector<int>> eps;
  std::map<Symbol, std::vector<std::vector<int>>> letters;
  std::vector<std::vector<int>> any;  // every edge, any label

  explicit Graph(const EpsilonAutomaton& a) : n(a.state_count()), eps(n), any(n) {
    for (const auto& e : a.epsilon_edges()) {
      eps[e.from].push_back(e.to);
      any[e.from].push_back(e.to);
    }
    for (const auto& e : a.letter_edges()) {
      auto& t = letters[e.label];
      if (t.empty()) t.resize(n);
      t[e.from].push_back(e.to);
      any[e.from].push_back(e.to);
    }
  }

  std::set<int> close(std::set<int> s, const std::vector<std::vector<int>>& adj) const {
    std::vector<int> stack(s.begin(), s.end());
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (s.insert(y).second) stack.push_back(y);
    }
    return s;
  }

  std::set<int> step(const std::set<int>& s, const Symbol& c) const {
    std::set<int> out;
    const auto it = letters.find(c);
    if (it == letters.end()) return out;
    for (int x : s)
      for (int y : it->second[x]) out.insert(y);
    return close(out, eps);
  }

  std::set<int> run(std::set<int> s, const Word& u) const {
    s = close(s, eps);
    for (const auto& c : u) s = step(s, c);
    return s;
  }

  bool reaches_final(const std::set<int>& s, const EpsilonAutomaton& a) const {
    for (int x : close(s, any))
      if (a.finals().count(x)) return true;
    return false;
  }

  bool hits_final(const std::set<int>& s, const EpsilonAutomaton& a) const {
    for (int x : s)
      if (a.finals().count(x)) return true;
    return false;
  }
};

// Regexes whose root is not a star.
std::vector<RegexPtr> unstarred(int atoms, const std::vector<std::string>& letters) {
  std::vector<RegexPtr> out;
  if (atoms == 1) {
    for (const auto& l : letters) {
      if (l == "@") {
        out.push_back(operalang::rx_epsilon());
      } else if (l == "#") {
        out.push_back(operalang::rx_empty());
      } else {
        out.push_back(operalang::rx_letter(l));
      }
    }
    return out;
  }
  for (int left = 1; left < atoms; ++left) {
    const auto ls = all_regexes(left, letters);
    const auto rs = all_regexes(atoms - left, letters);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        out.push_back(operalang::rx_union(l, r));
        out.push_back(operalang::rx_concat(l, r));
      }
  }
  return out;
}

}  // namespace

EpsilonAutomaton thompson(const RegexAst& rx) {
  EpsilonAutomaton a(1);  // state 0 unused as a spare start
  const Frag f = build(rx, a);
  a.add_epsilon(0, f.start);
  a.set_initial(0);
  a.add_final(f.end);
  return a;
}

std::set<Word> derive_words(const Relation& r, const std::vector<std::optional<Symbol>>& leaves,
                            int cap) {
  const int k = r.arity();
  std::set<Word> out;
  std::set<std::pair<int, Word>> seen;
  std::deque<std::pair<int, Word>> queue{{1, {}}};
  seen.insert(queue.front());
  auto push = [&](int nt, Word w) {
    if (seen.insert({nt, w}).second) queue.push_back({nt, std::move(w)});
  };
  while (!queue.empty()) {
    auto [nt, word] = queue.front();
    queue.pop_front();
    if (nt == k + 1) out.insert(word);
    if (nt <= k && leaves[nt - 1] && static_cast<int>(word.size()) < cap) {
      Word longer = word;
      longer.push_back(*leaves[nt - 1]);
      push(nt + 1, std::move(longer));
    }
    for (const auto& p : r.pairs())
      if (p.x == nt) push(p.y, word);
  }
  return out;
}

std::vector<Word> all_words(const std::vector<Symbol>& alphabet, int n) {
  std::vector<Word> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (const auto& c : alphabet) {
        Word longer = out[i];
        longer.push_back(c);
        out.push_back(std::move(longer));
      }
    level_start = level_end;
  }
  return out;
}

std::set<Word> language_upto(const EpsilonAutomaton& a, const std::vector<Symbol>& alphabet, int n) {
  const Graph g(a);
  std::set<Word> out;
  for (const auto& u : all_words(alphabet, n))
    if (g.hits_final(g.run({a.initial()}, u), a)) out.insert(u);
  return out;
}

bool in_prefixes(const EpsilonAutomaton& a, const Word& u) {
  const Graph g(a);
  return g.reaches_final(g.run({a.initial()}, u), a);
}

bool in_suffixes(const EpsilonAutomaton& a, const Word& u) {
  const Graph g(a);
  return g.hits_final(g.run(g.close({a.initial()}, g.any), u), a);
}

bool in_factors(const EpsilonAutomaton& a, const Word& u) {
  const Graph g(a);
  return g.reaches_final(g.run(g.close({a.initial()}, g.any), u), a);
}

bool in_subwords(const EpsilonAutomaton& a, const Word& u) {
  const Graph g(a);
  std::set<int> s = g.close({a.initial()}, g.any);
  for (const auto& c : u) s = g.close(g.step(s, c), g.any);
  return g.hits_final(s, a);
}

bool in_mirror(const EpsilonAutomaton& a, const Word& u) {
  const Graph g(a);
  const Word rev(u.rbegin(), u.rend());
  return g.hits_final(g.run({a.initial()}, rev), a);
}

operalang::PairSet closure_by_squaring(const operalang::PairSet& r) {
  operalang::PairSet cur = r;
  for (;;) {
    operalang::PairSet next = cur;
    for (const auto& p : cur)
      for (const auto& q : cur)
        if (p.y == q.x) next.insert({p.x, q.y});
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<RegexPtr> all_regexes(int atoms, const std::vector<std::string>& letters) {
  std::vector<RegexPtr> out;
  for (const auto& r : unstarred(atoms, letters)) {
    out.push_back(r);
    out.push_back(operalang::rx_star(r));
  }
  return out;
}

RegexPtr random_regex(int max_atoms, const std::vector<std::string>& letters, std::mt19937_64& rng) {
  std::function<RegexPtr(int)> gen = [&](int atoms) -> RegexPtr {
    RegexPtr r;
    if (atoms == 1) {
      const auto& l = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
      r = l == "@" ? operalang::rx_epsilon()
                   : (l == "#" ? operalang::rx_empty() : operalang::rx_letter(l));
    } else {
      const int left = std::uniform_int_distribution<int>(1, atoms - 1)(rng);
      RegexPtr a = gen(left);
      RegexPtr b = gen(atoms - left);
      r = std::bernoulli_distribution(0.5)(rng) ? operalang::rx_union(a, b)
                                                : operalang::rx_concat(a, b);
    }
    if (std::bernoulli_distribution(0.3)(rng)) r = operalang::rx_star(r);
    return r;
  };
  return gen(std::uniform_int_distribution<int>(1, max_atoms)(rng));
}

Relation random_aref(int arity, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  operalang::PairSet pairs;
  for (int x = 1; x <= arity + 1; ++x)
    for (int y = 1; y <= arity + 1; ++y)
      if (x != y && keep(rng)) pairs.insert({x, y});
  return Relation(arity, std::move(pairs));
}

Word w(const std::string& s) {
  Word out;
  for (char c : s) out.push_back(std::string(1, c));
  return out;
}

Word ws(const std::vector<int>& slots) {
  Word out;
  for (int i : slots) out.push_back("a" + std::to_string(i));
  return out;
}

}  // namespace oracle
