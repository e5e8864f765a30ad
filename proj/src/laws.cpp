#include "operalang/laws.hpp"

#include <map>

#include "operalang/enumeration.hpp"
#include "operalang/errors.hpp"
#include "operalang/literal.hpp"

namespace operalang {

namespace {

std::vector<Pair> candidates(OperadKind kind, int arity) {
  std::vector<Pair> out;
  for (int x = 1; x <= arity + 1; ++x) {
    for (int y = 1; y <= arity + 1; ++y) {
      switch (kind) {
        case OperadKind::Tilde:
        case OperadKind::DoubleTilde:
          if (x <= y && y <= arity) out.push_back({x, y});
          break;
        case OperadKind::Aras:
        case OperadKind::Poset:
          if (x < y) out.push_back({x, y});
          break;
        case OperadKind::Aref:
        case OperadKind::Qoset:
          if (x != y) out.push_back({x, y});
          break;
      }
    }
  }
  return out;
}

// Subsets of `pool` of exactly `size` elements.
std::vector<PairSet> subsets(const std::vector<Pair>& pool, int size) {
  std::vector<PairSet> out;
  PairSet current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.insert(pool[i]);
      self(self, i + 1);
      current.erase(pool[i]);
    }
  };
  rec(rec, 0);
  return out;
}

int off_diagonal(const Relation& r) {
  int n = 0;
  for (const auto& p : r.pairs()) n += p.x != p.y;
  return n;
}

}  // namespace

std::vector<OperadElement> elements_of(OperadKind kind, int arity, int pairs) {
  std::vector<OperadElement> out;
  const auto pool = candidates(kind, arity);
  switch (kind) {
    case OperadKind::Tilde:
      for (auto& s : subsets(pool, pairs)) out.push_back(MultiTilde(arity, std::move(s)));
      break;
    case OperadKind::Aras:
      for (auto& s : subsets(pool, pairs)) out.push_back(ArasRelation(Relation(arity, std::move(s))));
      break;
    case OperadKind::Aref:
      for (auto& s : subsets(pool, pairs)) out.push_back(ArefRelation(Relation(arity, std::move(s))));
      break;
    case OperadKind::DoubleTilde:
      for (int left = 0; left <= pairs; ++left)
        for (const auto& l : subsets(pool, left))
          for (const auto& r : subsets(pool, pairs - left))
            out.push_back(DoubleTilde(MultiTilde(arity, l), MultiTilde(arity, r)));
      break;
    case OperadKind::Poset:
      // Closed relations are their own class representatives.
      for (auto& s : subsets(pool, pairs)) {
        Relation r(arity, std::move(s));
        if (r.is_transitive()) out.push_back(PosetClass(std::move(r)));
      }
      break;
    case OperadKind::Qoset:
      for (auto& q : enumerate_qoset(arity))
        if (off_diagonal(q.relation()) == pairs) out.push_back(std::move(q));
      break;
  }
  return out;
}

OperadElement random_element(OperadKind kind, int arity, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  PairSet chosen;
  for (const auto& p : candidates(kind, arity))
    if (keep(rng)) chosen.insert(p);
  switch (kind) {
    case OperadKind::Tilde: return MultiTilde(arity, std::move(chosen));
    case OperadKind::Aras: return ArasRelation(Relation(arity, std::move(chosen)));
    case OperadKind::Aref: return ArefRelation(Relation(arity, std::move(chosen)));
    case OperadKind::DoubleTilde: {
      PairSet right;
      for (const auto& p : candidates(kind, arity))
        if (keep(rng)) right.insert(p);
      return DoubleTilde(MultiTilde(arity, std::move(chosen)), MultiTilde(arity, std::move(right)));
    }
    case OperadKind::Poset: return PosetClass::of(Relation(arity, std::move(chosen)));
    case OperadKind::Qoset: return QuasiOrder::closure_of(Relation(arity, std::move(chosen)));
  }
  throw InvariantError("unknown operad kind");
}

LawTally check_laws(const OperadElement& x, const OperadElement& y, const OperadElement& z) {
  LawTally t;
  auto record = [&](bool ok, const std::string& what) {
    ++t.checks;
    if (ok) return;
    if (t.failures++ == 0) {
      t.first_failure = what + " on " + to_literal(x) + ", " + to_literal(y) + ", " + to_literal(z);
    }
  };
  const OperadElement unit = identity_element(kind_of(x));
  const int kx = arity_of(x);
  const int ky = arity_of(y);

  record(compose(unit, 1, x) == x, "left unit");
  for (int i = 1; i <= kx; ++i) record(compose(x, i, unit) == x, "right unit at " + std::to_string(i));

  for (int i = 1; i <= kx; ++i) {
    const OperadElement xy = compose(x, i, y);
    for (int j = 1; j <= ky; ++j) {
      record(compose(xy, i + j - 1, z) == compose(x, i, compose(y, j, z)),
             "sequential law i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    for (int j = i + 1; j <= kx; ++j) {
      record(compose(xy, j + ky - 1, z) == compose(compose(x, j, z), i, y),
             "parallel law i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  }
  return t;
}

LawReport run_laws(OperadKind kind, const LawOptions& options) {
  LawReport report;
  report.kind = kind;
  auto absorb = [&](const LawTally& t) {
    report.checks += t.checks;
    report.failures += t.failures;
    if (t.failures && report.examples.size() < 5) report.examples.push_back(t.first_failure);
  };

  // pool[size] = every element with that many pairs, over all small arities
  std::vector<std::vector<OperadElement>> pool(options.max_total_pairs + 1);
  for (int a = 1; a <= options.max_arity; ++a)
    for (int s = 0; s <= options.max_total_pairs; ++s)
      for (auto& e : elements_of(kind, a, s)) pool[s].push_back(std::move(e));

  const int budget = options.max_total_pairs;
  for (int s1 = 0; s1 <= budget; ++s1)
    for (int s2 = 0; s1 + s2 <= budget; ++s2)
      for (int s3 = 0; s1 + s2 + s3 <= budget; ++s3)
        for (const auto& x : pool[s1])
          for (const auto& y : pool[s2])
            for (const auto& z : pool[s3]) absorb(check_laws(x, y, z));

  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(kind));
  std::uniform_int_distribution<int> arity(options.random_min_arity, options.random_max_arity);
  std::uniform_real_distribution<double> density(0.05, 0.4);
  for (int n = 0; n < options.random_samples; ++n) {
    const auto x = random_element(kind, arity(rng), density(rng), rng);
    const auto y = random_element(kind, arity(rng), density(rng), rng);
    const auto z = random_element(kind, arity(rng), density(rng), rng);
    absorb(check_laws(x, y, z));
  }
  return report;
}

std::vector<LawReport> run_all_laws(const LawOptions& options) {
  std::vector<LawReport> out;
  for (auto kind : kAllKinds) out.push_back(run_laws(kind, options));
  return out;
}

}  // namespace operalang
