#pragma once

#include "admlab/invariants.hpp"
#include "admlab/random_graph.hpp"
#include "admlab/report.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace admlab {

struct SweepEntry {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  MetrizedGraph graph;
  InvariantReport report;
};

/// Checks `count` random graphs, graph i drawn from task_seed(seed, i). Runs on the
/// worker pool; the result is ordered by index and does not depend on the thread count.
std::vector<SweepEntry> run_sweep(std::uint64_t seed, std::size_t count, const RandomGraphParams& params);

/// Minimum observed margin per margin-carrying check.
std::map<std::string, Rational> minimum_margins(const std::vector<SweepEntry>& entries);

Json to_json(const std::vector<SweepEntry>& entries, std::uint64_t seed);

}  // namespace admlab
