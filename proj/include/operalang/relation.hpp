#pragma once

// Integer-pair relations on the positions {1, ..., k+1} and the shift maps
// used by every partial composition in the library.

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace operalang {

/// A pair of 1-based positions. For multi-tildes it is a slot interval
/// [x, y]; for relations it is an edge x -> y between automaton states.
struct Pair {
  int x = 1;
  int y = 1;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Lexicographically ordered set of pairs; equality is structural.
using PairSet = std::set<Pair>;

/// Translates every pair by `offset` on both coordinates.
PairSet dec(int offset, const PairSet& pairs);

/// Multi-tilde shift: inserting k slots at slot i.
///   (x,y)             if y < i
///   (x, y+k-1)        if x <= i <= y
///   (x+k-1, y+k-1)    otherwise
/// Negative i behaves as i = 0.
PairSet shift_tilde(int i, int k, const PairSet& pairs);

/// Relation shift: every position p > i moves to p+k-1, positions <= i stay.
/// Negative i behaves as i = 0.
PairSet shift_diam(int i, int k, const PairSet& pairs);

/// (x,y) -> (y,x) on every pair.
PairSet reverse(const PairSet& pairs);

/// A finite relation on {1, ..., arity+1}.
class Relation {
 public:
  Relation() = default;
  /// Throws InvariantError when a pair leaves {1, ..., arity+1} or arity < 1.
  Relation(int arity, PairSet pairs);

  int arity() const noexcept { return arity_; }
  int size() const noexcept { return static_cast<int>(pairs_.size()); }
  const PairSet& pairs() const noexcept { return pairs_; }
  bool contains(Pair p) const { return pairs_.count(p) != 0; }
  bool empty() const noexcept { return pairs_.empty(); }

  /// No pair (n,n).
  bool is_antireflexive() const;
  /// Every pair satisfies x < y.
  bool is_order_compatible() const;
  /// Contains (n,n) for every n in {1, ..., arity+1}.
  bool is_reflexive() const;
  bool is_transitive() const;

  friend auto operator<=>(const Relation&, const Relation&) = default;

 private:
  int arity_ = 1;
  PairSet pairs_;
};

/// A multi-tilde of arity k: a set of slot intervals (x,y), 1 <= x <= y <= k.
class MultiTilde {
 public:
  MultiTilde() = default;
  MultiTilde(int arity, PairSet pairs);

  int arity() const noexcept { return arity_; }
  int size() const noexcept { return static_cast<int>(pairs_.size()); }
  const PairSet& pairs() const noexcept { return pairs_; }
  bool contains(Pair p) const { return pairs_.count(p) != 0; }

  friend auto operator<=>(const MultiTilde&, const MultiTilde&) = default;

 private:
  int arity_ = 1;
  PairSet pairs_;
};

/// Smallest transitive superset, computed over the bounded universe
/// {1, ..., arity+1} (Warshall).
Relation transitive_closure(const Relation& r);

/// Adds the full diagonal {(n,n) : 1 <= n <= arity+1}.
Relation reflexive_closure(const Relation& r);

/// Removes every pair (n,n).
Relation strip_diagonal(const Relation& r);

/// Pairs with x < y.
Relation split_lower(const Relation& r);

/// Pairs with x > y.
Relation split_upper(const Relation& r);

/// Renders `{(1,4),(2,3)}` in canonical order.
std::string to_string(const PairSet& pairs);

/// Parses `{(1,4),(2,3)}`; whitespace-insensitive. Throws ParseError.
PairSet parse_pair_set(std::string_view text);

/// Parses a pair-set literal starting at `pos` and advances `pos` past it.
PairSet parse_pair_set_at(std::string_view text, std::size_t& pos);

}  // namespace operalang
