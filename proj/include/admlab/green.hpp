#pragma once

#include "admlab/circuit.hpp"
#include "admlab/graph.hpp"
#include "admlab/rational.hpp"

#include <cstddef>
#include <array>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace admlab {

/// Point masses at vertices plus uniform densities on edges. `edge_masses[e]` is the
/// total mass carried by edge e. Signed measures are allowed.
struct Measure {
  std::vector<Rational> point_masses;
  std::vector<Rational> edge_masses;

  Rational total() const;
  bool is_nonnegative() const;
  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Restrict a measure on the original graph to the subdivided one; edge mass is split in
/// proportion to piece lengths.
Measure transfer(const Measure& measure, const Subdivision& subdivision);

/// a + b·t + c·t² in the edge coordinate t ∈ [0, L].
struct Quadratic {
  Rational a, b, c;

  Rational operator()(const Rational& t) const { return a + t * (b + t * c); }
  /// Mean value over [0, length].
  Rational mean(const Rational& length) const;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Unique quadratic through three points with distinct abscissae.
Quadratic interpolate(const std::array<Rational, 3>& t, const std::array<Rational, 3>& values);

/// A continuous function that is quadratic on every edge.
struct PiecewiseQuadratic {
  std::vector<Rational> vertex_values;
  std::vector<Quadratic> edges;
};

/// Σ_v f(v)·m({v}) + Σ_e m(e)·mean_e(f), exactly.
Rational integrate(const MetrizedGraph& graph, const PiecewiseQuadratic& f, const Measure& m);

/// μ = (1/g)[Σ g_v δ_v + Σ_e L_e/(L_e + r_e) δ_e]; bridges get 0, loops get 1.
Measure canonical_measure(const MetrizedGraph& graph);

/// Solves Δ_x g(x, y) = δ_y − μ with ∫ g(·, y) dμ = 0 on a fixed graph, for any
/// vertex source y. The Laplacian factorization is shared across solves.
class GreenKernel {
 public:
  GreenKernel(const MetrizedGraph& graph, Measure measure);

  const MetrizedGraph& graph() const { return *graph_; }
  const Measure& measure() const { return measure_; }

  PiecewiseQuadratic solve(std::size_t source_vertex) const;

 private:
  std::shared_ptr<const MetrizedGraph> graph_;
  Measure measure_;
  ExactLaplacian laplacian_;
};

/// −Σ_directions d f(P) − (δ_source − μ)({P}) at every vertex; all zero exactly when f
/// satisfies the point conditions of Δf = δ_source − μ.
std::vector<Rational> flux_residuals(const MetrizedGraph& graph, const Measure& mu, std::size_t source,
                                     const PiecewiseQuadratic& f);

/// g_μ(·, y) in exact piecewise-quadratic form.
class GreenSolution {
 public:
  GreenSolution(const MetrizedGraph& graph, const Measure& mu, const PointRef& source);

  const PointRef& source() const { return source_; }
  /// The graph the solution lives on: the input subdivided at the source.
  const MetrizedGraph& working_graph() const { return subdivision_.graph(); }
  const Measure& working_measure() const { return measure_; }
  const PiecewiseQuadratic& values() const { return values_; }

  /// g_μ(x, y) for any point x of the input graph.
  Rational operator()(const PointRef& x) const;

  /// −Σ_directions d g(P) − (δ_y − μ)({P}) per working vertex; all zero for a solution.
  std::vector<Rational> flux_residuals() const;
  /// ∫ g dμ, zero for a solution.
  Rational mean_against_measure() const;

 private:
  PointRef source_;
  Subdivision subdivision_;
  Measure measure_;
  std::size_t source_vertex_;
  PiecewiseQuadratic values_;
};

/// Throws std::invalid_argument unless mu has total mass exactly 1 and fits the graph.
void require_probability(const MetrizedGraph& graph, const Measure& mu);

GreenSolution green_solve(const MetrizedGraph& graph, const Measure& mu, const PointRef& y);
Rational green_value(const MetrizedGraph& graph, const Measure& mu, const PointRef& x, const PointRef& y);

/// Offsets (as fractions of the edge length) used to interpolate the diagonal, and the
/// extra offset used to confirm it.
inline const std::array<Rational, 3>& diagonal_fractions() {
  static const std::array<Rational, 3> f{Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  return f;
}
inline Rational diagonal_check_fraction() { return Rational(1, 4); }

/// Thrown when a function sampled at a fourth point leaves the interpolating quadratic.
class InterpolationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// q with q(t) = g_μ(x_t, x_t) along edge e.
Quadratic green_diagonal(const MetrizedGraph& graph, const Measure& mu, std::string_view edge_id);
/// One quadratic per edge (empty for edgeless graphs).
std::vector<Quadratic> green_diagonal_all(const MetrizedGraph& graph, const Measure& mu);

/// Floating-point finite-volume approximation of g_μ(·, y) at the original vertices:
/// each edge is cut into `segments` equal pieces and each piece's share of μ is split
/// equally between its two grid ends. An edge-point source snaps to the nearest grid node.
std::vector<double> discrete_oracle(const MetrizedGraph& graph, const Measure& mu, const PointRef& y,
                                    int segments);

}  // namespace admlab
