#pragma once

#include "admlab/graph.hpp"

#include <cstdint>

namespace admlab {

struct RandomGraphParams {
  int max_vertices = 8;
  int max_edges = 12;
  int min_genus = 2;
  int max_genus = 6;
  long max_numerator = 16;
  long max_denominator = 8;
};

/// Connected graph with genus in [min_genus, max_genus]: a uniform spanning tree (Prüfer
/// code) plus extra edges, which may be loops or parallel edges, and vertex genera for the
/// remaining genus. Graphs with a vertex of negative canonical weight are redrawn. The
/// result depends only on `seed` and the parameters.
MetrizedGraph random_graph(std::uint64_t seed, const RandomGraphParams& params = {});

/// Per-task seed derived from a sweep seed (splitmix64 step).
std::uint64_t task_seed(std::uint64_t sweep_seed, std::uint64_t index);

}  // namespace admlab
