#include "operalang/language.hpp"

#include <cctype>

#include "operalang/errors.hpp"
#include "operalang/literal.hpp"

namespace operalang {

std::string to_string(const Production& p) {
  const std::string lhs = "S" + std::to_string(p.from) + " -> ";
  switch (p.kind) {
    case Production::Kind::Letter:
      return lhs + "a" + std::to_string(p.from) + " S" + std::to_string(p.from + 1);
    case Production::Kind::Chain: return lhs + "S" + std::to_string(p.to);
    case Production::Kind::Epsilon: return lhs + "ε";
  }
  return lhs;
}

namespace {

std::vector<Production> grammar_from_chains(int k, const PairSet& chains) {
  std::vector<Production> out;
  for (int i = 1; i <= k; ++i) out.push_back({Production::Kind::Letter, i, i + 1});
  for (const auto& [x, y] : chains) out.push_back({Production::Kind::Chain, x, y});
  out.push_back({Production::Kind::Epsilon, k + 1, 0});
  return out;
}

}  // namespace

std::vector<Production> emit_grammar(const Relation& r) {
  if (!r.is_antireflexive()) throw InvariantError("grammar needs an antireflexive relation");
  return grammar_from_chains(r.arity(), r.pairs());
}

std::vector<Production> emit_grammar_double(const DoubleTilde& d) {
  const int k = d.arity();
  PairSet chains;
  for (int i = 1; i <= k + 1; ++i)
    for (int j = 1; j <= k + 1; ++j)
      if (d.right().contains({j, i - 1}) || d.left().contains({i, j - 1})) chains.insert({i, j});
  return grammar_from_chains(k, chains);
}

Leaf Leaf::of_letter(Symbol s) { return Leaf{Kind::Letter, std::move(s), nullptr}; }

Leaf Leaf::empty() { return Leaf{}; }

Leaf Leaf::of_expression(Expression e) {
  return Leaf{Kind::Sub, {}, std::make_shared<const Expression>(std::move(e))};
}

std::vector<Leaf> slot_leaves(int k) {
  std::vector<Leaf> out;
  for (int i = 1; i <= k; ++i) out.push_back(Leaf::of_letter("a" + std::to_string(i)));
  return out;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Expression parse_expression_at(std::string_view text, std::size_t& pos);

Leaf parse_leaf(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size()) throw ParseError("expected a leaf", pos);
  if (text[pos] == '_') {
    ++pos;
    return Leaf::empty();
  }
  if (text.substr(pos, 3) == "∅") {
    pos += 3;
    return Leaf::empty();
  }
  if (starts_operator(text, pos)) return Leaf::of_expression(parse_expression_at(text, pos));
  const std::size_t start = pos;
  if (!std::isalpha(static_cast<unsigned char>(text[pos]))) throw ParseError("expected a leaf", pos);
  while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
  return Leaf::of_letter(std::string(text.substr(start, pos - start)));
}

Expression parse_expression_at(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  OperadElement root = parse_operator_at(text, pos);
  const int k = arity_of(root);
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '(') return {std::move(root), slot_leaves(k)};
  ++pos;
  std::vector<Leaf> leaves;
  for (;;) {
    leaves.push_back(parse_leaf(text, pos));
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ')'", pos);
  }
  if (static_cast<int>(leaves.size()) != k) {
    throw ParseError("operator of arity " + std::to_string(k) + " given " +
                         std::to_string(leaves.size()) + " leaves",
                     start);
  }
  return {std::move(root), std::move(leaves)};
}

// One slot of an assembled automaton.
struct Slot {
  const Symbol* letter = nullptr;
  const EpsilonAutomaton* language = nullptr;
};

EpsilonAutomaton assemble(const Relation& r, const std::vector<Slot>& slots) {
  const int k = r.arity();
  if (static_cast<int>(slots.size()) != k) {
    throw ArityError("operator of arity " + std::to_string(k) + " given " +
                     std::to_string(slots.size()) + " arguments");
  }
  EpsilonAutomaton a(k + 1);
  for (int i = 0; i < k; ++i) {
    if (slots[i].letter) {
      a.add_letter(i, *slots[i].letter, i + 1);
    } else if (slots[i].language) {
      const EpsilonAutomaton& sub = *slots[i].language;
      const int offset = a.embed(sub);
      a.add_epsilon(i, sub.initial() + offset);
      for (int f : sub.finals()) a.add_epsilon(f + offset, i + 1);
    }
  }
  for (const auto& [x, y] : r.pairs()) a.add_epsilon(x - 1, y - 1);
  a.set_initial(0);
  a.add_final(k);
  return a;
}

}  // namespace

Expression parse_expression(std::string_view text) {
  std::size_t pos = 0;
  Expression e = parse_expression_at(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return e;
}

std::string to_string(const Expression& e) {
  std::string out = to_literal(e.root) + "(";
  for (std::size_t i = 0; i < e.leaves.size(); ++i) {
    if (i) out += ",";
    const Leaf& leaf = e.leaves[i];
    switch (leaf.kind) {
      case Leaf::Kind::Letter: out += leaf.letter; break;
      case Leaf::Kind::Empty: out += "_"; break;
      case Leaf::Kind::Sub: out += to_string(*leaf.sub); break;
    }
  }
  return out + ")";
}

EpsilonAutomaton build_automaton(const Relation& aref, const std::vector<Leaf>& leaves) {
  if (!aref.is_antireflexive()) throw InvariantError("automaton needs an antireflexive relation");
  if (static_cast<int>(leaves.size()) != aref.arity()) {
    throw ArityError("operator of arity " + std::to_string(aref.arity()) + " given " +
                     std::to_string(leaves.size()) + " leaves");
  }
  std::vector<EpsilonAutomaton> nested;
  nested.reserve(leaves.size());
  for (const auto& leaf : leaves)
    if (leaf.kind == Leaf::Kind::Sub) nested.push_back(build_automaton(*leaf.sub));
  std::vector<Slot> slots(leaves.size());
  std::size_t next_nested = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].kind == Leaf::Kind::Letter) slots[i].letter = &leaves[i].letter;
    if (leaves[i].kind == Leaf::Kind::Sub) slots[i].language = &nested[next_nested++];
  }
  EpsilonAutomaton a = assemble(aref, slots);
  for (const auto& leaf : leaves)
    if (leaf.kind == Leaf::Kind::Letter) a.add_symbol(leaf.letter);
  return a;
}

EpsilonAutomaton build_automaton(const Expression& e) {
  return build_automaton(to_aref(e.root), e.leaves);
}

EpsilonAutomaton act_on_languages(const OperadElement& e,
                                  const std::vector<EpsilonAutomaton>& languages) {
  std::vector<Slot> slots(languages.size());
  for (std::size_t i = 0; i < languages.size(); ++i) slots[i].language = &languages[i];
  return assemble(to_aref(e), slots);
}

EpsilonAutomaton letter_automaton(const Symbol& letter) {
  EpsilonAutomaton a(2);
  a.add_letter(0, letter, 1);
  a.set_initial(0);
  a.add_final(1);
  return a;
}

}  // namespace operalang
