#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gaoforge/report.hpp"
#include "gaoforge/search.hpp"

namespace gaoforge {

struct RunConfig {
  std::string command;                 // constants | extremal | classify | verify | project
  std::string moduli;                  // --n
  std::string weights = "units";
  std::string kind = "gao";            // gao | davenport
  std::string family;                  // odd | pow2 | 2p | 2rp | all
  std::optional<Int> max_n;
  std::string seq;
  std::optional<Int> to;               // project: natural map target
  SearchBudget budget;
  Int gao_ceiling = kDefaultGaoCeiling;
  Int davenport_ceiling = kDefaultDavenportCeiling;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10'000;
  bool properties = true;
  bool full = false;                   // verify: add the exhaustive DP-vs-naive suite
};

Json config_json(const RunConfig& c);

/// Runs one command. Never throws for bad input: parse problems land in
/// Report::parse_error, budget exhaustion in Report::budget_exhausted.
Report run_command(const RunConfig& c);

}  // namespace gaoforge
