#include "operalang/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "operalang/errors.hpp"

namespace operalang {

EpsilonAutomaton::EpsilonAutomaton(int state_count) : state_count_(state_count) {
  if (state_count < 1) throw InvariantError("automaton needs at least one state");
}

void EpsilonAutomaton::check_state(int s) const {
  if (s < 0 || s >= state_count_) {
    throw InvariantError("state " + std::to_string(s) + " outside 0.." +
                         std::to_string(state_count_ - 1));
  }
}

int EpsilonAutomaton::add_state() { return state_count_++; }

void EpsilonAutomaton::add_letter(int from, const Symbol& label, int to) {
  check_state(from);
  check_state(to);
  alphabet_.insert(label);
  letters_.insert({from, label, to});
}

void EpsilonAutomaton::add_epsilon(int from, int to) {
  check_state(from);
  check_state(to);
  if (from != to) epsilons_.insert({from, to});
}

void EpsilonAutomaton::set_initial(int state) {
  check_state(state);
  initial_ = state;
}

void EpsilonAutomaton::add_final(int state) {
  check_state(state);
  finals_.insert(state);
}

int EpsilonAutomaton::embed(const EpsilonAutomaton& other) {
  const int offset = state_count_;
  state_count_ += other.state_count_;
  alphabet_.insert(other.alphabet_.begin(), other.alphabet_.end());
  for (const auto& e : other.letters_) letters_.insert({e.from + offset, e.label, e.to + offset});
  for (const auto& e : other.epsilons_) epsilons_.insert({e.from + offset, e.to + offset});
  return offset;
}

namespace {

std::vector<std::vector<int>> epsilon_adjacency(const EpsilonAutomaton& a) {
  std::vector<std::vector<int>> adj(a.state_count());
  for (const auto& e : a.epsilon_edges()) adj[e.from].push_back(e.to);
  return adj;
}

void close_over(const std::vector<std::vector<int>>& adj, std::vector<char>& in,
                std::vector<int>& stack) {
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : adj[s]) {
      if (!in[t]) {
        in[t] = 1;
        stack.push_back(t);
      }
    }
  }
}

std::vector<int> members(const std::vector<char>& in) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(in.size()); ++s)
    if (in[s]) out.push_back(s);
  return out;
}

}  // namespace

std::set<int> epsilon_closure(const EpsilonAutomaton& a, const std::set<int>& states) {
  const auto adj = epsilon_adjacency(a);
  std::vector<char> in(a.state_count(), 0);
  std::vector<int> stack;
  for (int s : states) {
    if (s < 0 || s >= a.state_count()) throw InvariantError("state out of range");
    if (!in[s]) {
      in[s] = 1;
      stack.push_back(s);
    }
  }
  close_over(adj, in, stack);
  const auto m = members(in);
  return {m.begin(), m.end()};
}

bool accepts(const EpsilonAutomaton& a, const Word& word) {
  const auto adj = epsilon_adjacency(a);
  std::map<Symbol, std::vector<std::vector<int>>> moves;
  for (const auto& e : a.letter_edges()) {
    auto& table = moves[e.label];
    if (table.empty()) table.resize(a.state_count());
    table[e.from].push_back(e.to);
  }
  std::vector<char> current(a.state_count(), 0);
  std::vector<int> stack{a.initial()};
  current[a.initial()] = 1;
  close_over(adj, current, stack);
  for (const auto& letter : word) {
    if (!a.alphabet().count(letter)) throw InvariantError("unknown letter '" + letter + "'");
    std::vector<char> next(a.state_count(), 0);
    const auto it = moves.find(letter);
    if (it != moves.end()) {
      for (int s = 0; s < a.state_count(); ++s) {
        if (!current[s]) continue;
        for (int t : it->second[s]) {
          if (!next[t]) {
            next[t] = 1;
            stack.push_back(t);
          }
        }
      }
    }
    close_over(adj, next, stack);
    current = std::move(next);
  }
  for (int f : a.finals())
    if (current[f]) return true;
  return false;
}

Dfa determinize(const EpsilonAutomaton& a, const std::vector<Symbol>& alphabet) {
  Dfa d;
  if (alphabet.empty()) {
    d.alphabet.assign(a.alphabet().begin(), a.alphabet().end());
  } else {
    d.alphabet = alphabet;
    std::sort(d.alphabet.begin(), d.alphabet.end());
    d.alphabet.erase(std::unique(d.alphabet.begin(), d.alphabet.end()), d.alphabet.end());
  }
  const int n = a.state_count();
  const int sigma = static_cast<int>(d.alphabet.size());
  const auto adj = epsilon_adjacency(a);

  std::vector<std::vector<int>> closure(n);
  for (int s = 0; s < n; ++s) {
    std::vector<char> in(n, 0);
    std::vector<int> stack{s};
    in[s] = 1;
    close_over(adj, in, stack);
    closure[s] = members(in);
  }
  // moves[letter][state] = targets
  std::vector<std::vector<std::vector<int>>> moves(sigma, std::vector<std::vector<int>>(n));
  for (const auto& e : a.letter_edges()) {
    const auto it = std::lower_bound(d.alphabet.begin(), d.alphabet.end(), e.label);
    if (it == d.alphabet.end() || *it != e.label) continue;
    moves[it - d.alphabet.begin()][e.from].push_back(e.to);
  }

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    const auto [it, fresh] = index.emplace(subset, static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(std::move(subset));
      d.next.emplace_back(sigma, -1);
    }
    return it->second;
  };
  d.initial = intern(closure[a.initial()]);
  std::vector<char> in(n);
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (int c = 0; c < sigma; ++c) {
      std::fill(in.begin(), in.end(), 0);
      for (int s : subsets[cur])
        for (int t : moves[c][s])
          for (int u : closure[t]) in[u] = 1;
      const int target = intern(members(in));
      d.next[cur][c] = target;
    }
  }
  d.accepting.assign(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (int s : subsets[i])
      if (a.finals().count(s)) d.accepting[i] = true;
  return d;
}

Dfa minimize(const Dfa& d) {
  const int n = d.state_count();
  const int sigma = static_cast<int>(d.alphabet.size());
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) cls[s] = d.accepting[s] ? 1 : 0;
  int classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> refined(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(sigma + 1);
      sig.push_back(cls[s]);
      for (int c = 0; c < sigma; ++c) sig.push_back(cls[d.next[s][c]]);
      refined[s] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size())).first->second;
    }
    const int count = static_cast<int>(sig_index.size());
    cls = std::move(refined);
    if (count == classes) break;
    classes = count;
  }
  // Breadth-first renumbering over the quotient.
  std::vector<int> rep(classes, -1);
  for (int s = 0; s < n; ++s)
    if (rep[cls[s]] < 0) rep[cls[s]] = s;
  std::vector<int> order(classes, -1);
  std::deque<int> queue{cls[d.initial]};
  order[cls[d.initial]] = 0;
  int next_id = 1;
  Dfa m;
  m.alphabet = d.alphabet;
  std::vector<int> by_id{cls[d.initial]};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int l = 0; l < sigma; ++l) {
      const int t = cls[d.next[rep[c]][l]];
      if (order[t] < 0) {
        order[t] = next_id++;
        by_id.push_back(t);
        queue.push_back(t);
      }
    }
  }
  m.next.assign(by_id.size(), std::vector<int>(sigma));
  m.accepting.assign(by_id.size(), false);
  for (std::size_t id = 0; id < by_id.size(); ++id) {
    const int c = by_id[id];
    m.accepting[id] = d.accepting[rep[c]];
    for (int l = 0; l < sigma; ++l) m.next[id][l] = order[cls[d.next[rep[c]][l]]];
  }
  m.initial = 0;
  return m;
}

EquivalenceResult dfa_equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet) throw InvariantError("dfa_equivalent needs equal alphabets");
  const int sigma = static_cast<int>(a.alphabet.size());
  const int nb = b.state_count();
  struct Visit {
    int parent;
    int letter;
  };
  std::vector<Visit> seen(static_cast<std::size_t>(a.state_count()) * nb, Visit{-2, -1});
  auto key = [nb](int x, int y) { return static_cast<std::size_t>(x) * nb + y; };
  std::deque<std::pair<int, int>> queue{{a.initial, b.initial}};
  seen[key(a.initial, b.initial)] = {-1, -1};
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    if (a.accepting[x] != b.accepting[y]) {
      Word w;
      std::size_t k = key(x, y);
      while (seen[k].parent >= 0) {
        w.push_back(a.alphabet[seen[k].letter]);
        k = static_cast<std::size_t>(seen[k].parent);
      }
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (int c = 0; c < sigma; ++c) {
      const int nx = a.next[x][c];
      const int ny = b.next[y][c];
      auto& v = seen[key(nx, ny)];
      if (v.parent == -2) {
        v = {static_cast<int>(key(x, y)), c};
        queue.push_back({nx, ny});
      }
    }
  }
  return {true, std::nullopt};
}

EquivalenceResult language_equivalent(const EpsilonAutomaton& a, const EpsilonAutomaton& b) {
  std::set<Symbol> all = a.alphabet();
  all.insert(b.alphabet().begin(), b.alphabet().end());
  const std::vector<Symbol> alphabet(all.begin(), all.end());
  if (alphabet.empty()) {
    // No letters: compare acceptance of ε directly.
    const bool ea = accepts(a, {});
    const bool eb = accepts(b, {});
    if (ea == eb) return {true, std::nullopt};
    return {false, Word{}};
  }
  return dfa_equivalent(determinize(a, alphabet), determinize(b, alphabet));
}

std::vector<Word> accepted_words(const Dfa& d, int max_length) {
  const int n = d.state_count();
  const int sigma = static_cast<int>(d.alphabet.size());
  // Distance to acceptance, for pruning dead branches.
  std::vector<std::vector<int>> back(n);
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < sigma; ++c) back[d.next[s][c]].push_back(s);
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s)
    if (d.accepting[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (int p : back[s])
      if (dist[p] < 0) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
  }
  std::vector<Word> out;
  std::vector<std::pair<Word, int>> level;
  if (dist[d.initial] >= 0 && dist[d.initial] <= max_length) level.push_back({{}, d.initial});
  for (int len = 0; len <= max_length && !level.empty(); ++len) {
    std::vector<std::pair<Word, int>> deeper;
    for (auto& [w, s] : level) {
      if (d.accepting[s]) out.push_back(w);
      if (len == max_length) continue;
      for (int c = 0; c < sigma; ++c) {
        const int t = d.next[s][c];
        if (dist[t] < 0 || dist[t] > max_length - len - 1) continue;
        Word longer = w;
        longer.push_back(d.alphabet[c]);
        deeper.push_back({std::move(longer), t});
      }
    }
    level = std::move(deeper);
  }
  return out;
}

std::vector<Word> accepted_words(const EpsilonAutomaton& a, int max_length) {
  if (a.alphabet().empty()) {
    if (accepts(a, {})) return {Word{}};
    return {};
  }
  return accepted_words(determinize(a), max_length);
}

namespace {

// Regex terms for state elimination, with light algebraic simplification.
struct Re;
using ReP = std::shared_ptr<const Re>;

struct Re {
  enum Kind { Empty, Eps, Sym, Alt, Cat, Star } kind;
  std::string text;        // Sym
  std::vector<ReP> parts;  // Alt, Cat, Star(1)
};

ReP make(Re::Kind k, std::string text = {}, std::vector<ReP> parts = {}) {
  return std::make_shared<const Re>(Re{k, std::move(text), std::move(parts)});
}

std::string render(const ReP& r, int context);

// context: 0 = union operand, 1 = concat operand, 2 = star operand
std::string render(const ReP& r, int context) {
  switch (r->kind) {
    case Re::Empty: return "#";
    case Re::Eps: return "@";
    case Re::Sym: return r->text;
    case Re::Star: return render(r->parts[0], 2) + "*";
    case Re::Cat: {
      std::string s;
      for (const auto& p : r->parts) s += render(p, 1);
      return context >= 2 ? "(" + s + ")" : s;
    }
    case Re::Alt: {
      std::string s;
      for (std::size_t i = 0; i < r->parts.size(); ++i) {
        if (i) s += "+";
        s += render(r->parts[i], 0);
      }
      return context >= 1 ? "(" + s + ")" : s;
    }
  }
  return "";
}

std::string key_of(const ReP& r) { return render(r, 0); }

ReP alt(const ReP& a, const ReP& b) {
  std::vector<ReP> parts;
  auto add = [&](const ReP& r) {
    if (r->kind == Re::Empty) return;
    if (r->kind == Re::Alt) {
      parts.insert(parts.end(), r->parts.begin(), r->parts.end());
    } else {
      parts.push_back(r);
    }
  };
  add(a);
  add(b);
  std::map<std::string, ReP> unique;
  for (const auto& p : parts) unique.emplace(key_of(p), p);
  // ε is absorbed by any starred alternative.
  bool has_star = false;
  for (const auto& [k, p] : unique)
    if (p->kind == Re::Star) has_star = true;
  if (has_star) unique.erase("@");
  if (unique.empty()) return make(Re::Empty);
  if (unique.size() == 1) return unique.begin()->second;
  std::vector<ReP> sorted;
  for (const auto& [k, p] : unique)
    if (k == "@") sorted.push_back(p);
  for (const auto& [k, p] : unique)
    if (k != "@") sorted.push_back(p);
  return make(Re::Alt, {}, std::move(sorted));
}

ReP cat(const ReP& a, const ReP& b) {
  if (a->kind == Re::Empty || b->kind == Re::Empty) return make(Re::Empty);
  if (a->kind == Re::Eps) return b;
  if (b->kind == Re::Eps) return a;
  std::vector<ReP> parts;
  for (const auto& r : {a, b}) {
    if (r->kind == Re::Cat) {
      parts.insert(parts.end(), r->parts.begin(), r->parts.end());
    } else {
      parts.push_back(r);
    }
  }
  return make(Re::Cat, {}, std::move(parts));
}

ReP star(const ReP& a) {
  if (a->kind == Re::Empty || a->kind == Re::Eps) return make(Re::Eps);
  if (a->kind == Re::Star) return a;
  if (a->kind == Re::Alt) {
    std::vector<ReP> rest;
    for (const auto& p : a->parts)
      if (p->kind != Re::Eps) rest.push_back(p);
    if (rest.size() != a->parts.size()) {
      ReP inner = make(Re::Empty);
      for (const auto& p : rest) inner = alt(inner, p);
      return star(inner);
    }
  }
  return make(Re::Star, {}, {a});
}

}  // namespace

std::string to_regex_string(const Dfa& d) {
  const int n = d.state_count();
  const int sigma = static_cast<int>(d.alphabet.size());
  // Keep states reachable from the initial state that can reach acceptance.
  std::vector<char> fwd(n, 0), bwd(n, 0);
  std::vector<int> stack{d.initial};
  fwd[d.initial] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int c = 0; c < sigma; ++c)
      if (!fwd[d.next[s][c]]) {
        fwd[d.next[s][c]] = 1;
        stack.push_back(d.next[s][c]);
      }
  }
  for (int s = 0; s < n; ++s)
    if (d.accepting[s]) {
      bwd[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int p = 0; p < n; ++p)
      for (int c = 0; c < sigma; ++c)
        if (d.next[p][c] == s && !bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
  }
  if (!fwd[d.initial] || !bwd[d.initial]) return "#";

  // Nodes 0..n-1 are DFA states; n is the fresh start, n+1 the fresh end.
  const int start = n;
  const int end = n + 1;
  std::vector<std::vector<ReP>> edge(n + 2, std::vector<ReP>(n + 2, make(Re::Empty)));
  for (int s = 0; s < n; ++s) {
    if (!fwd[s] || !bwd[s]) continue;
    for (int c = 0; c < sigma; ++c) {
      const int t = d.next[s][c];
      if (fwd[t] && bwd[t]) edge[s][t] = alt(edge[s][t], make(Re::Sym, d.alphabet[c]));
    }
    if (d.accepting[s]) edge[s][end] = make(Re::Eps);
  }
  edge[start][d.initial] = make(Re::Eps);
  std::vector<char> alive(n + 2, 0);
  for (int s = 0; s < n; ++s) alive[s] = fwd[s] && bwd[s];
  alive[start] = alive[end] = 1;
  for (int s = n - 1; s >= 0; --s) {
    if (!alive[s]) continue;
    alive[s] = 0;
    const ReP loop = star(edge[s][s]);
    for (int p = 0; p < n + 2; ++p) {
      if (!alive[p] || edge[p][s]->kind == Re::Empty) continue;
      for (int q = 0; q < n + 2; ++q) {
        if (!alive[q] || edge[s][q]->kind == Re::Empty) continue;
        edge[p][q] = alt(edge[p][q], cat(cat(edge[p][s], loop), edge[s][q]));
      }
    }
  }
  return key_of(edge[start][end]);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "ε";
  const bool single = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single) out += ' ';
    out += w[i];
  }
  return out;
}

std::string to_dot(const EpsilonAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n";
  for (int s = 0; s < a.state_count(); ++s) {
    os << "  " << s + 1 << " [shape=" << (a.finals().count(s) ? "doublecircle" : "circle")
       << "];\n";
  }
  os << "  start -> " << a.initial() + 1 << ";\n";
  for (const auto& e : a.letter_edges())
    os << "  " << e.from + 1 << " -> " << e.to + 1 << " [label=\"" << e.label << "\"];\n";
  for (const auto& e : a.epsilon_edges())
    os << "  " << e.from + 1 << " -> " << e.to + 1 << " [label=\"ε\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const EpsilonAutomaton& a) {
  nlohmann::ordered_json j;
  j["states"] = a.state_count();
  j["alphabet"] = std::vector<Symbol>(a.alphabet().begin(), a.alphabet().end());
  j["initial"] = a.initial() + 1;
  std::vector<int> finals;
  for (int f : a.finals()) finals.push_back(f + 1);
  j["finals"] = finals;
  j["letter_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : a.letter_edges()) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from + 1;
    edge["label"] = e.label;
    edge["to"] = e.to + 1;
    j["letter_edges"].push_back(edge);
  }
  j["epsilon_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : a.epsilon_edges()) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from + 1;
    edge["to"] = e.to + 1;
    j["epsilon_edges"].push_back(edge);
  }
  return j.dump(2) + "\n";
}

}  // namespace operalang
