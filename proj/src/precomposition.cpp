#include "operalang/precomposition.hpp"

#include <map>

namespace operalang {

BoxWord box_normalize(BoxWord word) {
  BoxWord w;
  for (auto g : word) {
    if (g.k < 1) throw InvariantError("box generator requires k >= 1");
    if (g.k == 1) continue;
    if (g.i < 0) g.i = 0;
    w.push_back(g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t n = 0; n + 1 < w.size(); ++n) {
      const BoxGenerator left = w[n];
      const BoxGenerator right = w[n + 1];
      const int j = left.i - right.i;
      if (j >= 0 && j < right.k) {
        w[n] = {right.i, left.k + right.k - 1};
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(n) + 1);
        changed = true;
        break;
      }
      if (left.i >= right.i + right.k - 1) {
        w[n] = right;
        w[n + 1] = {left.i - right.k + 1, left.k};
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::string to_string(const BoxWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& g : word) {
    out += "D(" + std::to_string(g.i) + "," + std::to_string(g.k) + ")";
  }
  return out;
}

namespace {

PairSet unite(const PairSet& a, const PairSet& b) {
  PairSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

int max_coordinate(const PairSet& s) {
  int m = 0;
  for (const auto& [x, y] : s) m = std::max({m, x, y});
  return m;
}

}  // namespace

PairSet TildePrecomposition::combine(const Carrier& a, const Carrier& b) const {
  return unite(a, b);
}

int TildePrecomposition::grade(const Carrier& s) const { return std::max(1, max_coordinate(s)); }

PairSet ArasPrecomposition::combine(const Carrier& a, const Carrier& b) const {
  return unite(a, b);
}

int ArasPrecomposition::grade(const Carrier& s) const {
  return std::max(1, max_coordinate(s) - 1);
}

PairSet ArefPrecomposition::combine(const Carrier& a, const Carrier& b) const {
  return unite(a, b);
}

int ArefPrecomposition::grade(const Carrier& s) const {
  return std::max(1, max_coordinate(s) - 1);
}

PairSet close_transitively(const PairSet& pairs) {
  std::map<int, std::set<int>> succ;
  for (const auto& [x, y] : pairs) succ[x].insert(y);
  PairSet out;
  for (const auto& [start, _] : succ) {
    std::set<int> seen;
    std::vector<int> stack(succ[start].begin(), succ[start].end());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      auto it = succ.find(v);
      if (it != succ.end()) stack.insert(stack.end(), it->second.begin(), it->second.end());
    }
    for (int v : seen) out.insert({start, v});
  }
  return out;
}

PairSet close_strictly(const PairSet& pairs) {
  PairSet out;
  for (const auto& p : close_transitively(pairs))
    if (p.x != p.y) out.insert(p);
  return out;
}

}  // namespace operalang
