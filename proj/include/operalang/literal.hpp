#pragma once

// Textual operator literals:
//   tilde[5]{(1,3),(2,2),(3,4)}     aras[3]{(1,3)}      aref[5]{(1,4),(4,2)}
//   dt[5]({(1,3)},{(2,3)})          poset[3]{(1,2)}     qoset[2]{(1,2),(2,1)}
// The diagonal of a quasiorder is implied and never printed; a poset literal
// may give any order-compatible representative and is printed closed.

#include <cstddef>
#include <string>
#include <string_view>

#include "operalang/operads.hpp"

namespace operalang {

std::string to_literal(const OperadElement& e);

/// Throws ParseError on malformed text or a value violating its carrier
/// invariants.
OperadElement parse_operator(std::string_view text);

/// Parses an operator literal at `pos`, advancing past it.
OperadElement parse_operator_at(std::string_view text, std::size_t& pos);

/// True when `text` at `pos` (after whitespace) starts an operator literal.
bool starts_operator(std::string_view text, std::size_t pos);

}  // namespace operalang
