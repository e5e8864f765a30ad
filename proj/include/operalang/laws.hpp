#pragma once

// Property sweep of the operad axioms (both associativity identities and the
// two-sided unit) for each concrete operad.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "operalang/operads.hpp"

namespace operalang {

struct LawOptions {
  int max_arity = 3;        // exhaustive part
  int max_total_pairs = 3;  // summed over the operands of one check
  int random_samples = 1000;
  int random_min_arity = 4;
  int random_max_arity = 5;
  std::uint64_t seed = 20240611;
};

struct LawReport {
  OperadKind kind = OperadKind::Tilde;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> examples;  // first few failures

  bool passed() const { return failures == 0; }
};

/// Every element of the operad with the given arity and exactly `pairs`
/// pairs (for double tildes, counted over both components; for quasiorders,
/// off-diagonal pairs of the closed relation; for POSet, pairs of the
/// closed representative).
std::vector<OperadElement> elements_of(OperadKind kind, int arity, int pairs);

/// A random element: each candidate pair kept with probability `density`,
/// closed where the operad requires it.
OperadElement random_element(OperadKind kind, int arity, double density, std::mt19937_64& rng);

/// Result of checking every law instance on (x, y, z).
struct LawTally {
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
};
LawTally check_laws(const OperadElement& x, const OperadElement& y, const OperadElement& z);

LawReport run_laws(OperadKind kind, const LawOptions& options = {});
std::vector<LawReport> run_all_laws(const LawOptions& options = {});

inline constexpr OperadKind kAllKinds[] = {OperadKind::Tilde,       OperadKind::Aras,
                                           OperadKind::Aref,        OperadKind::DoubleTilde,
                                           OperadKind::Poset,       OperadKind::Qoset};

}  // namespace operalang
