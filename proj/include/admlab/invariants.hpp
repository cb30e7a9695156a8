#pragma once

#include "admlab/graph.hpp"
#include "admlab/green.hpp"
#include "admlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace admlab {

/// One named check. `margin`, when present, is the exact slack (≥ 0 means satisfied).
struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<Rational> margin;
  std::string detail;
};

struct InvariantReport {
  long genus = 0;
  Rational total_length;
  std::vector<Rational> delta;  // δ_0 .. δ_{⌊g/2⌋}
  Rational epsilon;
  Rational epsilon_alt;
  Rational phi;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

Rational total_length(const MetrizedGraph& graph);

/// δ_i = total length of the edges of type i. Requires genus ≥ 2.
std::vector<Rational> delta_invariants(const MetrizedGraph& graph);

/// ∫ g_μ(x,x) d((2g − 2)μ + δ_K), μ canonical. Requires genus ≥ 2.
Rational epsilon(const MetrizedGraph& graph);

/// Σ_v K_v ∫ r(v, y) dμ(y). Requires genus ≥ 2.
Rational epsilon_via_resistance(const MetrizedGraph& graph);

/// −ℓ/4 + ¼ ∫ g_μ(x,x) d((10g + 2)μ − δ_K). Requires genus ≥ 2.
Rational phi(const MetrizedGraph& graph);

/// Everything above plus the exact property checks; failures are recorded, not thrown.
InvariantReport run_checks(const MetrizedGraph& graph);

/// Per-edge offset fractions at which the batch analysis places sample points. Always
/// contains {1/4, 1/3, 1/2, 2/3}; grown for tiny graphs so that there are at least ten
/// sample points in total.
std::vector<Rational> sample_fractions(const MetrizedGraph& graph);

/// Exact Green's-function data on all sample points of a graph, computed on one shared
/// subdivision.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(const MetrizedGraph& graph);

  const MetrizedGraph& graph() const { return graph_; }
  long genus() const { return genus_; }
  const Measure& measure() const { return mu_; }
  const Divisor& canonical() const { return canonical_; }

  /// Working graph: the input subdivided at every sample point.
  const MetrizedGraph& working_graph() const { return subdivision_->graph(); }
  /// Working-graph vertex index of each sample point (original vertices first).
  const std::vector<std::size_t>& sample_vertices() const { return samples_; }
  /// Sample points as points of the original graph, aligned with sample_vertices().
  const std::vector<PointRef>& sample_points() const { return sample_points_; }

  /// g_μ(x, y) between working-graph vertices.
  const Rational& green(std::size_t x, std::size_t y) const { return green_[x][y]; }
  /// r(x, y) between working-graph vertices.
  Rational resistance(std::size_t x, std::size_t y) const;

  /// Diagonal x ↦ g_μ(x,x) on each original edge.
  const std::vector<Quadratic>& diagonal() const { return diagonal_; }
  /// ∫ g_μ(x, x) dμ(x).
  Rational diagonal_mass() const;
  /// Σ_v K_v g_μ(v, v).
  Rational diagonal_canonical() const;

  Rational epsilon() const;
  Rational epsilon_via_resistance() const;
  Rational phi() const;

  /// Defining-property residuals collected while solving.
  bool flux_balanced() const { return flux_ok_; }
  bool mean_zero() const { return mean_ok_; }

 private:
  MetrizedGraph graph_;
  long genus_;
  Measure mu_;
  Divisor canonical_;
  std::optional<Subdivision> subdivision_;
  std::vector<std::size_t> samples_;
  std::vector<PointRef> sample_points_;
  std::vector<std::vector<Rational>> green_;
  std::vector<std::vector<Rational>> grounded_inverse_;  // columns of L^{-1} grounded at 0
  std::vector<Quadratic> diagonal_;
  bool flux_ok_ = true;
  bool mean_ok_ = true;
};

}  // namespace admlab
