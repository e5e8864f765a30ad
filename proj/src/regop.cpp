#include "operalang/regop.hpp"

#include "operalang/errors.hpp"
#include "operalang/literal.hpp"
#include "operalang/operads.hpp"

namespace operalang {

FlatOperator make_flat(Relation r, std::vector<std::optional<Symbol>> leaves) {
  if (!r.is_antireflexive()) throw InvariantError("flat operator needs an antireflexive relation");
  if (static_cast<int>(leaves.size()) != r.arity()) {
    throw InvariantError("flat operator of arity " + std::to_string(r.arity()) + " given " +
                         std::to_string(leaves.size()) + " leaves");
  }
  return FlatOperator{std::move(r), std::move(leaves)};
}

Expression to_expression(const FlatOperator& f) {
  std::vector<Leaf> leaves;
  for (const auto& l : f.leaves) leaves.push_back(l ? Leaf::of_letter(*l) : Leaf::empty());
  return {ArefRelation(f.relation), std::move(leaves)};
}

std::string to_string(const FlatOperator& f) { return to_string(to_expression(f)); }

FlatOperator flatten(const Expression& e) {
  std::vector<std::optional<Symbol>> leaves;
  for (const auto& l : e.leaves) {
    if (l.kind == Leaf::Kind::Sub) throw InvariantError("flat operator leaves must be letters or ∅");
    leaves.push_back(l.kind == Leaf::Kind::Letter ? std::optional<Symbol>(l.letter) : std::nullopt);
  }
  return make_flat(to_aref(e.root), std::move(leaves));
}

FlatOperator parse_flat(std::string_view text) {
  const Expression e = parse_expression(text);
  try {
    return flatten(e);
  } catch (const InvariantError& err) {
    throw ParseError(err.what(), 0);
  }
}

EpsilonAutomaton build_automaton(const FlatOperator& f) {
  return build_automaton(f.relation, to_expression(f).leaves);
}

namespace {

std::vector<std::optional<Symbol>> join(std::vector<std::optional<Symbol>> a,
                                        const std::vector<std::optional<Symbol>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FlatOperator with_pairs(const FlatOperator& f, const PairSet& extra) {
  PairSet pairs = f.relation.pairs();
  for (const auto& p : extra)
    if (p.x != p.y) pairs.insert(p);
  return FlatOperator{Relation(f.arity(), std::move(pairs)), f.leaves};
}

// l, then an ∅ slot, then r shifted past it; plus `extra` pairs.
FlatOperator juxtapose(const FlatOperator& l, const FlatOperator& r, PairSet extra) {
  const int k = l.arity();
  PairSet pairs = l.relation.pairs();
  for (const auto& p : dec(k + 1, r.relation.pairs())) pairs.insert(p);
  pairs.insert(extra.begin(), extra.end());
  auto leaves = l.leaves;
  leaves.push_back(std::nullopt);
  leaves = join(std::move(leaves), r.leaves);
  return make_flat(Relation(k + 1 + r.arity(), std::move(pairs)), std::move(leaves));
}

}  // namespace

bool initial_has_incoming(const FlatOperator& f) {
  for (const auto& p : f.relation.pairs())
    if (p.y == 1) return true;
  return false;
}

bool final_has_outgoing(const FlatOperator& f) {
  for (const auto& p : f.relation.pairs())
    if (p.x == f.arity() + 1) return true;
  return false;
}

FlatOperator isolate_initial(const FlatOperator& f) {
  PairSet pairs = dec(1, f.relation.pairs());
  pairs.insert({1, 2});
  std::vector<std::optional<Symbol>> leaves{std::nullopt};
  leaves = join(std::move(leaves), f.leaves);
  return make_flat(Relation(f.arity() + 1, std::move(pairs)), std::move(leaves));
}

FlatOperator isolate_final(const FlatOperator& f) {
  const int k = f.arity();
  PairSet pairs = f.relation.pairs();
  pairs.insert({k + 1, k + 2});
  auto leaves = f.leaves;
  leaves.push_back(std::nullopt);
  return make_flat(Relation(k + 1, std::move(pairs)), std::move(leaves));
}

FlatOperator flat_union(const FlatOperator& l, const FlatOperator& r) {
  const FlatOperator left = initial_has_incoming(l) ? isolate_initial(l) : l;
  const FlatOperator right = final_has_outgoing(r) ? isolate_final(r) : r;
  const int k = left.arity();
  const int k2 = right.arity();
  return juxtapose(left, right, {{1, k + 2}, {k + 1, k + k2 + 2}});
}

FlatOperator flat_concat(const FlatOperator& l, const FlatOperator& r) {
  const int k = l.arity();
  return juxtapose(l, r, {{k + 1, k + 2}});
}

FlatOperator flat_star(const FlatOperator& l) {
  FlatOperator f = initial_has_incoming(l) ? isolate_initial(l) : l;
  if (final_has_outgoing(f)) f = isolate_final(f);
  const int k = f.arity();
  return with_pairs(f, {{k + 1, 1}, {1, k + 1}});
}

FlatOperator compile(const RegexAst& rx) {
  using K = RegexAst::Kind;
  switch (rx.kind) {
    case K::Letter: return make_flat(Relation(1, {}), {rx.letter});
    case K::Epsilon: return make_flat(Relation(1, {{1, 2}}), {std::nullopt});
    case K::EmptySet: return make_flat(Relation(1, {}), {std::nullopt});
    case K::Union: return flat_union(compile(*rx.left), compile(*rx.right));
    case K::Concat: return flat_concat(compile(*rx.left), compile(*rx.right));
    case K::Star: return flat_star(compile(*rx.left));
  }
  throw InvariantError("unknown regex node");
}

std::set<int> admissible_positions(const FlatOperator& f) {
  const int n = f.arity() + 1;
  std::vector<std::vector<int>> out(n + 1), in(n + 1);
  auto edge = [&](int a, int b) {
    out[a].push_back(b);
    in[b].push_back(a);
  };
  for (int i = 1; i <= f.arity(); ++i)
    if (f.leaves[i - 1]) edge(i, i + 1);
  for (const auto& [x, y] : f.relation.pairs()) edge(x, y);

  std::vector<char> from_start(n + 1, 0);
  std::vector<int> stack{1};
  from_start[1] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : out[s])
      if (!from_start[t]) {
        from_start[t] = 1;
        stack.push_back(t);
      }
  }
  // States with a non-empty path to the final state.
  std::vector<char> to_final(n + 1, 0);
  for (int p : in[n])
    if (!to_final[p]) {
      to_final[p] = 1;
      stack.push_back(p);
    }
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int p : in[s])
      if (!to_final[p]) {
        to_final[p] = 1;
        stack.push_back(p);
      }
  }
  std::set<int> adm;
  for (int s = 1; s <= n; ++s)
    if (from_start[s] && to_final[s]) adm.insert(s);
  return adm;
}

FlatOperator prefixes(const FlatOperator& f) {
  const FlatOperator g = final_has_outgoing(f) ? isolate_final(f) : f;
  const int last = g.arity() + 1;
  PairSet extra;
  for (int i : admissible_positions(g))
    if (i != last) extra.insert({i, last});
  return with_pairs(g, extra);
}

FlatOperator suffixes(const FlatOperator& f) {
  const FlatOperator g = initial_has_incoming(f) ? isolate_initial(f) : f;
  const std::set<int> adm = admissible_positions(g);
  PairSet extra;
  for (int i : adm)
    if (i != 1) extra.insert({1, i});
  // ε is a suffix of every nonempty language; the final state is never
  // admissible, so it needs its own pair.
  if (adm.count(1)) extra.insert({1, g.arity() + 1});
  return with_pairs(g, extra);
}

FlatOperator factors(const FlatOperator& f) { return suffixes(prefixes(f)); }

FlatOperator subwords(const FlatOperator& f) {
  PairSet extra;
  for (int i = 1; i <= f.arity(); ++i)
    if (f.leaves[i - 1]) extra.insert({i, i + 1});
  return with_pairs(f, extra);
}

FlatOperator mirror(const FlatOperator& f) {
  const int k = f.arity();
  PairSet pairs;
  for (const auto& [x, y] : f.relation.pairs()) pairs.insert({k + 2 - y, k + 2 - x});
  return make_flat(Relation(k, std::move(pairs)),
                   std::vector<std::optional<Symbol>>(f.leaves.rbegin(), f.leaves.rend()));
}

FlatOperator apply_transform(std::string_view name, const FlatOperator& f) {
  if (name == "prefixes") return prefixes(f);
  if (name == "suffixes") return suffixes(f);
  if (name == "factors") return factors(f);
  if (name == "subwords") return subwords(f);
  if (name == "mirror") return mirror(f);
  throw InvariantError("unknown transform '" + std::string(name) + "'");
}

FlatOperator builtin_family(int k, int which) {
  if (k < 1) throw InvariantError("family arity must be positive");
  PairSet pairs;
  switch (which) {
    case 1: pairs = {{k + 1, 1}, {1, k + 1}}; break;
    case 2:
      for (int i = 1; i <= k + 1; ++i)
        for (int j = 1; j <= k + 1; ++j)
          if (i != j) pairs.insert({i, j});
      break;
    case 3:
      pairs.insert({k + 1, 1});
      for (int i = 1; i <= k; ++i) pairs.insert({i, k + 1});
      break;
    case 4:
      pairs.insert({k + 1, 1});
      for (int i = 1; i <= k; ++i) pairs.insert({1, i + 1});
      break;
    case 5:
      for (int i = 1; i <= k; ++i) pairs.insert({i + 1, i});
      break;
    default: throw InvariantError("unknown family " + std::to_string(which));
  }
  std::vector<std::optional<Symbol>> leaves;
  for (int i = 1; i <= k; ++i) leaves.push_back("a" + std::to_string(i));
  return make_flat(Relation(k, std::move(pairs)), std::move(leaves));
}

FlatOperator builtin_family(int k, std::string_view which) {
  static const char* const kNames[] = {"star-word", "star-letters", "star-prefixes",
                                       "star-suffixes", "descending"};
  for (int i = 0; i < 5; ++i)
    if (which == kNames[i] || which == std::to_string(i + 1)) return builtin_family(k, i + 1);
  throw InvariantError("unknown family '" + std::string(which) + "'");
}

}  // namespace operalang
