#include <doctest.h>

#include <random>

#include "operalang/errors.hpp"
#include "operalang/relation.hpp"
#include "oracles.hpp"

using namespace operalang;

namespace {

PairSet ps(std::initializer_list<Pair> l) { return PairSet(l); }

// Every pair set over {1..n} x {1..n} with at most `max_pairs` pairs.
std::vector<PairSet> small_sets(int n, int max_pairs) {
  std::vector<Pair> all;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) all.push_back({x, y});
  std::vector<PairSet> out{{}};
  for (int round = 0; round < max_pairs; ++round) {
    std::set<PairSet> next(out.begin(), out.end());
    for (const auto& s : out)
      for (const auto& p : all) {
        PairSet t = s;
        t.insert(p);
        next.insert(t);
      }
    out.assign(next.begin(), next.end());
  }
  return out;
}

Relation random_relation(int arity, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  PairSet pairs;
  for (int x = 1; x <= arity + 1; ++x)
    for (int y = 1; y <= arity + 1; ++y)
      if (keep(rng)) pairs.insert({x, y});
  return Relation(arity, pairs);
}

}  // namespace

TEST_CASE("dec translates both coordinates") {
  CHECK(dec(0, ps({{1, 2}})) == ps({{1, 2}}));
  CHECK(dec(1, ps({{2, 3}})) == ps({{3, 4}}));
  CHECK(dec(3, ps({{1, 1}, {2, 5}})) == ps({{4, 4}, {5, 8}}));
}

TEST_CASE("shift_tilde cases") {
  const PairSet p = ps({{1, 3}, {2, 2}, {3, 4}});
  for (int i = -2; i <= 6; ++i) CHECK(shift_tilde(i, 1, p) == p);
  CHECK(shift_tilde(2, 4, ps({{1, 3}})) == ps({{1, 6}}));
  CHECK(shift_tilde(5, 3, ps({{1, 2}})) == ps({{1, 2}}));
  CHECK(shift_tilde(-4, 3, p) == shift_tilde(0, 3, p));
}

TEST_CASE("shift_diam cases") {
  CHECK(shift_diam(2, 4, ps({{1, 4}, {2, 3}, {3, 5}, {4, 2}})) ==
        ps({{1, 7}, {2, 6}, {6, 8}, {7, 2}}));
  const PairSet p = ps({{1, 4}, {4, 2}});
  for (int i = -1; i <= 5; ++i) CHECK(shift_diam(i, 1, p) == p);
  CHECK(shift_diam(0, 3, ps({{2, 1}})) == ps({{4, 3}}));
  CHECK(shift_diam(-7, 3, p) == shift_diam(0, 3, p));
}

TEST_CASE("box laws for shift_diam, exhaustive on small sets") {
  // Sets of at most 2 pairs on 5 points cover every relative order of coordinates.
  const auto sets = small_sets(5, 2);
  long long checked = 0;
  for (const auto& s : sets) {
    for (int i = -1; i <= 5; ++i)
      for (int j = -1; j <= 5; ++j)
        for (int k = 1; k <= 3; ++k)
          for (int k2 = 1; k2 <= 3; ++k2) {
            // law (3): i <= j or both non-positive
            if (i <= j || (i <= 0 && j <= 0)) {
              CHECK(shift_diam(i, k, shift_diam(j, k2, s)) ==
                    shift_diam(j + k - 1, k2, shift_diam(i, k, s)));
              ++checked;
            }
            // law (4): 0 <= j < k2
            if (i >= 0 && j >= 0 && j < k2) {
              CHECK(shift_diam(i + j, k, shift_diam(i, k2, s)) == shift_diam(i, k + k2 - 1, s));
            }
          }
  }
  CHECK(checked > 0);
}

TEST_CASE("shift_diam commutes with reverse") {
  for (const auto& s : small_sets(4, 2))
    for (int i = -1; i <= 4; ++i)
      for (int k = 1; k <= 3; ++k) CHECK(reverse(shift_diam(i, k, s)) == shift_diam(i, k, reverse(s)));
}

TEST_CASE("transitive_closure examples") {
  CHECK(transitive_closure(Relation(2, ps({{1, 2}, {2, 3}}))).pairs() == ps({{1, 2}, {2, 3}, {1, 3}}));
  CHECK(transitive_closure(Relation(2, {})).pairs().empty());
  CHECK(transitive_closure(Relation(1, ps({{1, 2}, {2, 1}}))).pairs() ==
        ps({{1, 2}, {2, 1}, {1, 1}, {2, 2}}));
}

TEST_CASE("transitive_closure agrees with iterated squaring, is idempotent, monotone and shift-compatible") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int arity = 1 + trial % 4;
    const Relation r = random_relation(arity, 0.25, rng);
    const Relation c = transitive_closure(r);
    CHECK(c.pairs() == oracle::closure_by_squaring(r.pairs()));
    CHECK(transitive_closure(c) == c);
    CHECK(c.is_transitive());
    for (const auto& p : r.pairs()) CHECK(c.contains(p));
    // monotone: adding a pair never removes closure pairs
    PairSet bigger = r.pairs();
    bigger.insert({1, arity + 1});
    const Relation cb = transitive_closure(Relation(arity, bigger));
    for (const auto& p : c.pairs()) CHECK(cb.contains(p));
    for (int i = -1; i <= arity + 1; ++i)
      for (int k = 1; k <= 3; ++k) {
        CHECK(oracle::closure_by_squaring(shift_diam(i, k, r.pairs())) ==
              shift_diam(i, k, c.pairs()));
      }
  }
}

TEST_CASE("reflexive_closure and strip_diagonal") {
  CHECK(reflexive_closure(Relation(1, {})).pairs() == ps({{1, 1}, {2, 2}}));
  CHECK(reflexive_closure(Relation(2, ps({{2, 1}}))).pairs() == ps({{2, 1}, {1, 1}, {2, 2}, {3, 3}}));
  CHECK(strip_diagonal(Relation(1, ps({{1, 1}, {1, 2}}))).pairs() == ps({{1, 2}}));
  CHECK(strip_diagonal(Relation(1, {})).pairs().empty());

  const Relation r1(5, ps({{1, 4}, {2, 3}, {3, 5}, {4, 2}}));
  const PairSet expected = ps({{1, 4}, {2, 3}, {3, 5}, {4, 2}, {1, 2}, {2, 5}, {4, 3}, {1, 3},
                               {4, 5}, {1, 5}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
  CHECK(reflexive_closure(transitive_closure(r1)).pairs() == expected);
  CHECK(expected.size() == 16);

  // Closing then stripping equals closing the off-diagonal part and
  // stripping, since the diagonal never adds off-diagonal pairs.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Relation r = random_relation(3, 0.3, rng);
    const Relation lhs = strip_diagonal(transitive_closure(reflexive_closure(r)));
    const Relation rhs = strip_diagonal(transitive_closure(strip_diagonal(r)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reverse and splits") {
  CHECK(reverse(ps({{2, 4}})) == ps({{4, 2}}));
  const PairSet p = ps({{1, 4}, {4, 2}, {3, 3}});
  CHECK(reverse(reverse(p)) == p);
  const Relation r(4, ps({{1, 4}, {4, 2}}));
  CHECK(split_lower(r).pairs() == ps({{1, 4}}));
  CHECK(split_upper(r).pairs() == ps({{4, 2}}));
}

TEST_CASE("relation invariants are enforced") {
  CHECK_THROWS_AS(Relation(2, ps({{1, 4}})), InvariantError);
  CHECK_THROWS_AS(Relation(2, ps({{0, 1}})), InvariantError);
  CHECK_THROWS_AS(Relation(0, {}), InvariantError);
  CHECK_THROWS_AS(MultiTilde(3, ps({{3, 2}})), InvariantError);
  CHECK_THROWS_AS(MultiTilde(3, ps({{1, 4}})), InvariantError);
  CHECK_NOTHROW(MultiTilde(3, ps({{3, 3}})));

  const Relation r(3, ps({{1, 2}, {2, 4}}));
  CHECK(r.is_antireflexive());
  CHECK(r.is_order_compatible());
  CHECK_FALSE(r.is_reflexive());
  CHECK_FALSE(r.is_transitive());
}

TEST_CASE("pair-set literals round trip") {
  const PairSet p = ps({{2, 3}, {1, 4}});
  CHECK(to_string(p) == "{(1,4),(2,3)}");
  CHECK(parse_pair_set(" { ( 1 , 4 ) ,(2,3)} ") == p);
  CHECK(parse_pair_set("{}").empty());
  CHECK_THROWS_AS(parse_pair_set("{(1,4)"), ParseError);
  CHECK_THROWS_AS(parse_pair_set("{(1;4)}"), ParseError);
  try {
    parse_pair_set("{(1,x)}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
