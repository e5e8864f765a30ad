#include "operalang/regex.hpp"

#include <cctype>

#include "operalang/errors.hpp"

namespace operalang {

namespace {

RegexPtr node(RegexAst::Kind kind, Symbol letter = {}, RegexPtr l = nullptr, RegexPtr r = nullptr) {
  return std::make_shared<const RegexAst>(RegexAst{kind, std::move(letter), std::move(l), std::move(r)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexPtr parse() {
    RegexPtr r = parse_union();
    skip();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '@' || c == '#';
  }

  RegexPtr parse_union() {
    RegexPtr r = parse_concat();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      r = rx_union(r, parse_concat());
      skip();
    }
    return r;
  }

  RegexPtr parse_concat() {
    if (!starts_atom()) {
      if (pos_ >= text_.size()) throw ParseError("unexpected end of regex", pos_);
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    RegexPtr r = parse_starred();
    while (starts_atom()) r = rx_concat(r, parse_starred());
    return r;
  }

  RegexPtr parse_starred() {
    RegexPtr r = parse_atom();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      r = rx_star(r);
      skip();
    }
    return r;
  }

  RegexPtr parse_atom() {
    skip();
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      RegexPtr r = parse_union();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("unclosed '('", open);
      ++pos_;
      return r;
    }
    ++pos_;
    if (c == '@') return rx_epsilon();
    if (c == '#') return rx_empty();
    return rx_letter(std::string(1, c));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// 0 = union context, 1 = concat operand, 2 = star operand
std::string render(const RegexAst& r, int context) {
  using K = RegexAst::Kind;
  switch (r.kind) {
    case K::Letter: return r.letter;
    case K::EmptySet: return "#";
    case K::Epsilon: return "@";
    case K::Star: return render(*r.left, 2) + "*";
    case K::Concat: {
      const std::string s = render(*r.left, 1) + render(*r.right, 1);
      return context >= 2 ? "(" + s + ")" : s;
    }
    case K::Union: {
      const std::string s = render(*r.left, 0) + "+" + render(*r.right, 0);
      return context >= 1 ? "(" + s + ")" : s;
    }
  }
  return "";
}

}  // namespace

RegexPtr rx_letter(Symbol s) { return node(RegexAst::Kind::Letter, std::move(s)); }
RegexPtr rx_empty() { return node(RegexAst::Kind::EmptySet); }
RegexPtr rx_epsilon() { return node(RegexAst::Kind::Epsilon); }
RegexPtr rx_union(RegexPtr a, RegexPtr b) {
  return node(RegexAst::Kind::Union, {}, std::move(a), std::move(b));
}
RegexPtr rx_concat(RegexPtr a, RegexPtr b) {
  return node(RegexAst::Kind::Concat, {}, std::move(a), std::move(b));
}
RegexPtr rx_star(RegexPtr a) { return node(RegexAst::Kind::Star, {}, std::move(a)); }

RegexPtr parse_regex(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RegexAst& r) { return render(r, 0); }

int atom_count(const RegexAst& r) {
  using K = RegexAst::Kind;
  switch (r.kind) {
    case K::Letter:
    case K::EmptySet:
    case K::Epsilon: return 1;
    case K::Star: return atom_count(*r.left);
    case K::Union:
    case K::Concat: return atom_count(*r.left) + atom_count(*r.right);
  }
  return 0;
}

int binary_count(const RegexAst& r) {
  using K = RegexAst::Kind;
  switch (r.kind) {
    case K::Star: return binary_count(*r.left);
    case K::Union:
    case K::Concat: return 1 + binary_count(*r.left) + binary_count(*r.right);
    default: return 0;
  }
}

}  // namespace operalang
