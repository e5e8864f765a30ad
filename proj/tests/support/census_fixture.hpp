#pragma once

// Reader for census fixtures: `qoset-literal TAB regex [TAB note]` per line.

#include <optional>
#include <string>
#include <vector>

#include "operalang/automaton.hpp"
#include "operalang/operads.hpp"

namespace fixture {

struct CensusRow {
  operalang::QuasiOrder order;
  std::string regex;                     // as printed, over letters a, b
  std::string note;                      // empty unless flagged
  std::optional<std::string> recomputed;  // from "recomputed <regex>" in the note
};

/// Reads OPERALANG_FIXTURES/<name>; throws std::runtime_error on a bad line.
std::vector<CensusRow> load_census(const std::string& name);

/// The row's regex over slot letters: a -> a1, b -> a2, c -> a3.
operalang::EpsilonAutomaton regex_on_slots(const std::string& regex);

}  // namespace fixture
