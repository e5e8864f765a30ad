#pragma once

// Regular expression syntax tree and parser.
//
// Syntax: single alphanumeric letters, `+` union, juxtaposition for
// concatenation, postfix `*`, parentheses, `@` for ε and `#` for ∅.
// Precedence: star binds tightest, then concatenation, then union.

#include <memory>
#include <string>
#include <string_view>

#include "operalang/automaton.hpp"

namespace operalang {

struct RegexAst;
using RegexPtr = std::shared_ptr<const RegexAst>;

struct RegexAst {
  enum class Kind { Letter, EmptySet, Epsilon, Union, Concat, Star };
  Kind kind = Kind::EmptySet;
  Symbol letter;
  RegexPtr left;   // Union, Concat, Star
  RegexPtr right;  // Union, Concat
};

RegexPtr rx_letter(Symbol s);
RegexPtr rx_empty();
RegexPtr rx_epsilon();
RegexPtr rx_union(RegexPtr a, RegexPtr b);
RegexPtr rx_concat(RegexPtr a, RegexPtr b);
RegexPtr rx_star(RegexPtr a);

/// Throws ParseError with the offending position.
RegexPtr parse_regex(std::string_view text);

/// Fully parenthesised only where precedence requires it; reparses to an
/// equal tree up to associativity.
std::string to_string(const RegexAst& r);

/// Number of Letter, EmptySet and Epsilon leaves.
int atom_count(const RegexAst& r);
/// Number of Union and Concat nodes.
int binary_count(const RegexAst& r);

}  // namespace operalang
