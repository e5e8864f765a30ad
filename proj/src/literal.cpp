#include "operalang/literal.hpp"

#include <array>
#include <cctype>

#include "operalang/errors.hpp"

namespace operalang {

namespace {

constexpr std::array<std::string_view, 6> kKeywords = {"tilde", "aras", "aref",
                                                       "dt",    "poset", "qoset"};

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "'", pos);
  }
  ++pos;
}

std::string read_word(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
  return std::string(text.substr(start, pos - start));
}

int read_arity(std::string_view text, std::size_t& pos) {
  expect(text, pos, '[');
  skip_space(text, pos);
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || pos - start > 6) throw ParseError("expected arity", start);
  const int k = std::stoi(std::string(text.substr(start, pos - start)));
  if (k < 1) throw ParseError("arity must be positive", start);
  expect(text, pos, ']');
  return k;
}

PairSet strip_diag(const PairSet& s) {
  PairSet out;
  for (const auto& p : s)
    if (p.x != p.y) out.insert(p);
  return out;
}

}  // namespace

std::string to_literal(const OperadElement& e) {
  const std::string head = kind_name(kind_of(e)) + "[" + std::to_string(arity_of(e)) + "]";
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MultiTilde>) {
          return head + to_string(v.pairs());
        } else if constexpr (std::is_same_v<T, DoubleTilde>) {
          return head + "(" + to_string(v.left().pairs()) + "," + to_string(v.right().pairs()) +
                 ")";
        } else if constexpr (std::is_same_v<T, QuasiOrder>) {
          return head + to_string(strip_diag(v.relation().pairs()));
        } else {
          return head + to_string(v.relation().pairs());
        }
      },
      e);
}

bool starts_operator(std::string_view text, std::size_t pos) {
  skip_space(text, pos);
  std::size_t end = pos;
  while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
  const auto word = text.substr(pos, end - pos);
  skip_space(text, end);
  if (end >= text.size() || text[end] != '[') return false;
  for (auto kw : kKeywords)
    if (kw == word) return true;
  return false;
}

OperadElement parse_operator_at(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  const std::string word = read_word(text, pos);
  const int k = read_arity(text, pos);
  try {
    if (word == "dt") {
      expect(text, pos, '(');
      PairSet left = parse_pair_set_at(text, pos);
      expect(text, pos, ',');
      PairSet right = parse_pair_set_at(text, pos);
      expect(text, pos, ')');
      return DoubleTilde(MultiTilde(k, std::move(left)), MultiTilde(k, std::move(right)));
    }
    const std::size_t body = pos;
    PairSet pairs = parse_pair_set_at(text, pos);
    try {
      if (word == "tilde") return MultiTilde(k, std::move(pairs));
      if (word == "aras") return ArasRelation(Relation(k, std::move(pairs)));
      if (word == "aref") return ArefRelation(Relation(k, std::move(pairs)));
      if (word == "poset") return PosetClass::of(Relation(k, std::move(pairs)));
      if (word == "qoset") return QuasiOrder(reflexive_closure(Relation(k, std::move(pairs))));
    } catch (const InvariantError& err) {
      throw ParseError(err.what(), body);
    }
  } catch (const InvariantError& err) {
    throw ParseError(err.what(), start);
  }
  throw ParseError("unknown operator keyword '" + word + "'", start);
}

OperadElement parse_operator(std::string_view text) {
  std::size_t pos = 0;
  OperadElement e = parse_operator_at(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return e;
}

}  // namespace operalang
