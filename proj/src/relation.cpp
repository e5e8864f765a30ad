#include "operalang/relation.hpp"

#include <cctype>
#include <vector>

#include "operalang/errors.hpp"

namespace operalang {

namespace {

int shift_point(int p, int i, int k) { return p <= i ? p : p + k - 1; }

void check_shift_args(int k) {
  if (k < 1) throw InvariantError("shift requires k >= 1, got " + std::to_string(k));
}

}  // namespace

PairSet dec(int offset, const PairSet& pairs) {
  PairSet out;
  for (const auto& [x, y] : pairs) out.insert({x + offset, y + offset});
  return out;
}

PairSet shift_tilde(int i, int k, const PairSet& pairs) {
  check_shift_args(k);
  if (i < 0) i = 0;
  PairSet out;
  for (const auto& [x, y] : pairs) {
    if (y < i) {
      out.insert({x, y});
    } else if (x <= i) {
      out.insert({x, y + k - 1});
    } else {
      out.insert({x + k - 1, y + k - 1});
    }
  }
  return out;
}

PairSet shift_diam(int i, int k, const PairSet& pairs) {
  check_shift_args(k);
  if (i < 0) i = 0;
  PairSet out;
  for (const auto& [x, y] : pairs) out.insert({shift_point(x, i, k), shift_point(y, i, k)});
  return out;
}

PairSet reverse(const PairSet& pairs) {
  PairSet out;
  for (const auto& [x, y] : pairs) out.insert({y, x});
  return out;
}

Relation::Relation(int arity, PairSet pairs) : arity_(arity), pairs_(std::move(pairs)) {
  if (arity_ < 1) throw InvariantError("relation arity must be >= 1");
  for (const auto& [x, y] : pairs_) {
    if (x < 1 || y < 1 || x > arity_ + 1 || y > arity_ + 1) {
      throw InvariantError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                           ") outside positions 1.." + std::to_string(arity_ + 1));
    }
  }
}

bool Relation::is_antireflexive() const {
  for (const auto& [x, y] : pairs_)
    if (x == y) return false;
  return true;
}

bool Relation::is_order_compatible() const {
  for (const auto& [x, y] : pairs_)
    if (x >= y) return false;
  return true;
}

bool Relation::is_reflexive() const {
  for (int n = 1; n <= arity_ + 1; ++n)
    if (!contains({n, n})) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (const auto& [x, y] : pairs_) {
    for (auto it = pairs_.lower_bound({y, 0}); it != pairs_.end() && it->x == y; ++it) {
      if (!contains({x, it->y})) return false;
    }
  }
  return true;
}

MultiTilde::MultiTilde(int arity, PairSet pairs) : arity_(arity), pairs_(std::move(pairs)) {
  if (arity_ < 1) throw InvariantError("multi-tilde arity must be >= 1");
  for (const auto& [x, y] : pairs_) {
    if (x < 1 || x > y || y > arity_) {
      throw InvariantError("tilde (" + std::to_string(x) + "," + std::to_string(y) +
                           ") violates 1 <= x <= y <= " + std::to_string(arity_));
    }
  }
}

Relation transitive_closure(const Relation& r) {
  const int n = r.arity() + 1;
  std::vector<std::vector<char>> m(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& [x, y] : r.pairs()) m[x][y] = 1;
  for (int via = 1; via <= n; ++via)
    for (int a = 1; a <= n; ++a)
      if (m[a][via])
        for (int b = 1; b <= n; ++b)
          if (m[via][b]) m[a][b] = 1;
  PairSet out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (m[a][b]) out.insert({a, b});
  return Relation(r.arity(), std::move(out));
}

Relation reflexive_closure(const Relation& r) {
  PairSet out = r.pairs();
  for (int n = 1; n <= r.arity() + 1; ++n) out.insert({n, n});
  return Relation(r.arity(), std::move(out));
}

Relation strip_diagonal(const Relation& r) {
  PairSet out;
  for (const auto& p : r.pairs())
    if (p.x != p.y) out.insert(p);
  return Relation(r.arity(), std::move(out));
}

Relation split_lower(const Relation& r) {
  PairSet out;
  for (const auto& p : r.pairs())
    if (p.x < p.y) out.insert(p);
  return Relation(r.arity(), std::move(out));
}

Relation split_upper(const Relation& r) {
  PairSet out;
  for (const auto& p : r.pairs())
    if (p.x > p.y) out.insert(p);
  return Relation(r.arity(), std::move(out));
}

std::string to_string(const PairSet& pairs) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, y] : pairs) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(x) + ',' + std::to_string(y) + ')';
  }
  out += '}';
  return out;
}

namespace {

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

int parse_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && text[start] == '-')) {
    throw ParseError("expected integer", start);
  }
  if (pos - start > 9) throw ParseError("integer too large", start);
  return std::stoi(std::string(text.substr(start, pos - start)));
}

}  // namespace

PairSet parse_pair_set_at(std::string_view text, std::size_t& pos) {
  PairSet out;
  expect(text, pos, '{');
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return out;
  }
  while (true) {
    expect(text, pos, '(');
    const int x = parse_int(text, pos);
    expect(text, pos, ',');
    const int y = parse_int(text, pos);
    expect(text, pos, ')');
    out.insert({x, y});
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(text, pos, '}');
    return out;
  }
}

PairSet parse_pair_set(std::string_view text) {
  std::size_t pos = 0;
  PairSet out = parse_pair_set_at(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return out;
}

}  // namespace operalang
