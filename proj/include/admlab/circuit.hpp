#pragma once

#include "admlab/graph.hpp"
#include "admlab/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace admlab {

/// Exact LDL^T factorization of a grounded weighted graph Laplacian (conductance
/// 1/L_e per edge). Vertices are eliminated in minimum-degree order, so the
/// degree-2 chains produced by subdivision cost almost nothing.
class ExactLaplacian {
 public:
  ExactLaplacian(const MetrizedGraph& graph, std::size_t ground);

  /// Potentials with value 0 at the ground satisfying Kirchhoff's current law for the
  /// given injections. Injections must sum to zero (std::invalid_argument otherwise).
  std::vector<Rational> solve(const std::vector<Rational>& injections) const;

  /// Effective resistance between two vertices.
  Rational resistance(std::size_t a, std::size_t b) const;

  std::size_t ground() const { return ground_; }
  std::size_t size() const { return n_; }

 private:
  struct Step {
    std::size_t pivot;
    Rational diagonal;
    std::vector<std::pair<std::size_t, Rational>> lower;  // (row, L[row][pivot])
  };

  std::size_t n_;
  std::size_t ground_;
  std::vector<Step> steps_;
};

/// Vertex potentials indexed like the graph's vertices.
struct PotentialVector {
  std::vector<Rational> values;

  const Rational& at(std::size_t v) const { return values.at(v); }
};

/// Solve L·φ = s exactly with φ(ground) = 0. Sources are keyed by vertex id.
PotentialVector solve_flow(const MetrizedGraph& graph, const std::map<std::string, Rational>& sources,
                           const std::string& ground);

/// Potential at x when unit current enters at y and leaves at zeta (grounded there).
Rational j_function(const MetrizedGraph& graph, const PointRef& zeta, const PointRef& y, const PointRef& x);

/// Effective resistance r(x, y) = j_y(x, x).
Rational resistance(const MetrizedGraph& graph, const PointRef& x, const PointRef& y);

/// Σ_e R(e)/L_e with R(e) the full-graph resistance between e's endpoints; equals |V| − 1.
Rational foster_sum(const MetrizedGraph& graph);

struct InfiniteResistance {
  friend bool operator==(InfiniteResistance, InfiniteResistance) { return true; }
};

using CutResistance = std::variant<Rational, InfiniteResistance>;

/// Resistance between the endpoints of an edge in the graph with that edge's interior
/// removed. Infinite for bridges, 0 for loops.
CutResistance cut_resistance(const MetrizedGraph& graph, std::string_view edge_id);
CutResistance cut_resistance(const MetrizedGraph& graph, std::size_t edge);

std::string to_string(const CutResistance& r);

}  // namespace admlab
