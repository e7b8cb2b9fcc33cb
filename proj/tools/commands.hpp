#pragma once

#include "report.hpp"

#include <antichain/search.hpp>

#include <cstdint>

namespace antichain::cli {

struct SuiteOptions {
  int max_n = 5;
  std::uint64_t seed = 0x5eed'2024;
  std::uint64_t node_cap = 0;
  unsigned workers = 1;
  std::size_t samples = 40; ///< randomized certificate runs per system
};

inline constexpr int kSuiteMaxN = 7;

/// Appends one outcome per check of the small-n verification matrix.
void run_verify_suite(RunReport &report, const SuiteOptions &options);

/// Outcome for a finished search: fail on counterexample, inconclusive on
/// budget exhaustion, otherwise pass.
Outcome search_outcome(std::string name, std::string source, const SearchResult &result);

} // namespace antichain::cli
