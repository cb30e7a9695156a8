#include "admlab/green.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace admlab {

Rational Measure::total() const {
  Rational t;
  for (const auto& m : point_masses) t += m;
  for (const auto& m : edge_masses) t += m;
  return t;
}

bool Measure::is_nonnegative() const {
  for (const auto& m : point_masses) {
    if (m.sign() < 0) return false;
  }
  for (const auto& m : edge_masses) {
    if (m.sign() < 0) return false;
  }
  return true;
}

Measure transfer(const Measure& measure, const Subdivision& subdivision) {
  const auto& g = subdivision.graph();
  Measure out;
  out.point_masses.assign(g.vertex_count(), Rational(0));
  for (std::size_t v = 0; v < subdivision.original_vertex_count(); ++v) out.point_masses[v] = measure.point_masses.at(v);
  out.edge_masses.reserve(g.edge_count());
  for (std::size_t piece = 0; piece < g.edge_count(); ++piece) {
    const std::size_t orig = subdivision.piece_origin(piece).first;
    Rational orig_length;
    for (std::size_t p : subdivision.pieces(orig)) orig_length += g.edges()[p].length;
    out.edge_masses.push_back(measure.edge_masses.at(orig) * g.edges()[piece].length / orig_length);
  }
  return out;
}

Rational Quadratic::mean(const Rational& length) const {
  return a + b * length / Rational(2) + c * length * length / Rational(3);
}

Quadratic interpolate(const std::array<Rational, 3>& t, const std::array<Rational, 3>& values) {
  // Newton divided differences.
  const Rational d01 = (values[1] - values[0]) / (t[1] - t[0]);
  const Rational d12 = (values[2] - values[1]) / (t[2] - t[1]);
  const Rational d012 = (d12 - d01) / (t[2] - t[0]);
  // f = v0 + d01 (x - t0) + d012 (x - t0)(x - t1)
  Quadratic q;
  q.c = d012;
  q.b = d01 - d012 * (t[0] + t[1]);
  q.a = values[0] - d01 * t[0] + d012 * t[0] * t[1];
  return q;
}

Rational integrate(const MetrizedGraph& graph, const PiecewiseQuadratic& f, const Measure& m) {
  if (f.vertex_values.size() != graph.vertex_count() || m.point_masses.size() != graph.vertex_count()) {
    throw std::invalid_argument("missing vertex data for integration");
  }
  if (f.edges.size() != graph.edge_count() || m.edge_masses.size() != graph.edge_count()) {
    throw std::invalid_argument("missing edge data for integration");
  }
  Rational sum;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (!m.point_masses[v].is_zero()) sum += f.vertex_values[v] * m.point_masses[v];
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!m.edge_masses[e].is_zero()) sum += m.edge_masses[e] * f.edges[e].mean(graph.edges()[e].length);
  }
  return sum;
}

Measure canonical_measure(const MetrizedGraph& graph) {
  const long g = genus(graph);
  if (g < 1) throw std::invalid_argument("canonical measure needs genus >= 1");
  const Rational inv_g(1, g);
  Measure mu;
  mu.point_masses.reserve(graph.vertex_count());
  for (const auto& v : graph.vertices()) mu.point_masses.push_back(Rational(v.genus) * inv_g);
  mu.edge_masses.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto r = cut_resistance(graph, e);
    Rational coefficient;
    if (const auto* finite = std::get_if<Rational>(&r)) {
      const Rational& len = graph.edges()[e].length;
      coefficient = len / (len + *finite);
    }
    mu.edge_masses.push_back(coefficient * inv_g);
  }
  if (mu.total() != Rational(1)) std::abort();  // Foster's identity forces total mass 1
  return mu;
}

void require_probability(const MetrizedGraph& graph, const Measure& mu) {
  if (mu.point_masses.size() != graph.vertex_count() || mu.edge_masses.size() != graph.edge_count()) {
    throw std::invalid_argument("measure does not match the graph");
  }
  if (mu.total() != Rational(1)) {
    throw std::invalid_argument("measure must have total mass 1, got " + mu.total().to_string());
  }
}

// ---------------------------------------------------------------------------

GreenKernel::GreenKernel(const MetrizedGraph& graph, Measure measure)
    : graph_(std::make_shared<const MetrizedGraph>(graph)), measure_(std::move(measure)), laplacian_(graph, 0) {
  require_probability(graph, measure_);
}

PiecewiseQuadratic GreenKernel::solve(std::size_t source_vertex) const {
  const auto& g = *graph_;
  if (source_vertex >= g.vertex_count()) throw std::out_of_range("source vertex out of range");

  // Kirchhoff form: each edge's share of δ_y − μ is lumped half to each end, which is
  // exact for quadratics on the edge.
  std::vector<Rational> injection(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) injection[v] = -measure_.point_masses[v];
  injection[source_vertex] += Rational(1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Rational half = measure_.edge_masses[e] / Rational(2);
    injection[g.edges()[e].tail] -= half;
    injection[g.edges()[e].head] -= half;
  }
  PiecewiseQuadratic f;
  f.vertex_values = laplacian_.solve(injection);
  f.edges.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    Quadratic q;
    q.c = measure_.edge_masses[e] / (Rational(2) * edge.length);
    q.a = f.vertex_values[edge.tail];
    q.b = (f.vertex_values[edge.head] - f.vertex_values[edge.tail]) / edge.length - q.c * edge.length;
    f.edges.push_back(q);
  }
  const Rational shift = integrate(g, f, measure_);
  for (auto& v : f.vertex_values) v -= shift;
  for (auto& q : f.edges) q.a -= shift;
  return f;
}

// ---------------------------------------------------------------------------

GreenSolution::GreenSolution(const MetrizedGraph& graph, const Measure& mu, const PointRef& source)
    : source_(source), subdivision_([&] {
        require_probability(graph, mu);
        return Subdivision(graph, {source});
      }()),
      measure_(transfer(mu, subdivision_)),
      source_vertex_(subdivision_.graph().vertex_index(subdivision_.mapped_points()[0].id())),
      values_(GreenKernel(subdivision_.graph(), measure_).solve(source_vertex_)) {}

Rational GreenSolution::operator()(const PointRef& x) const {
  const auto& g = subdivision_.graph();
  const Location loc = g.resolve(subdivision_.map(x));
  if (loc.is_vertex()) return values_.vertex_values[loc.index];
  return values_.edges[loc.index](loc.offset);
}

std::vector<Rational> flux_residuals(const MetrizedGraph& g, const Measure& mu, std::size_t source,
                                     const PiecewiseQuadratic& f) {
  std::vector<Rational> residual(g.vertex_count());
  // Start from −ν({P}) and add −(outgoing derivative) for every direction at P.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) residual[v] = mu.point_masses[v];
  residual[source] -= Rational(1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    const auto& q = f.edges[e];
    const Rational out_tail = q.b;
    const Rational out_head = -(q.b + Rational(2) * q.c * edge.length);
    residual[edge.tail] -= out_tail;
    residual[edge.head] -= out_head;
  }
  return residual;
}

std::vector<Rational> GreenSolution::flux_residuals() const {
  return admlab::flux_residuals(subdivision_.graph(), measure_, source_vertex_, values_);
}

Rational GreenSolution::mean_against_measure() const {
  return integrate(subdivision_.graph(), values_, measure_);
}

GreenSolution green_solve(const MetrizedGraph& graph, const Measure& mu, const PointRef& y) {
  return GreenSolution(graph, mu, y);
}

Rational green_value(const MetrizedGraph& graph, const Measure& mu, const PointRef& x, const PointRef& y) {
  return GreenSolution(graph, mu, y)(x);
}

Quadratic green_diagonal(const MetrizedGraph& graph, const Measure& mu, std::string_view edge_id) {
  const std::size_t e = graph.edge_index(edge_id);
  const Rational& len = graph.edges()[e].length;
  const auto& fr = diagonal_fractions();
  std::array<Rational, 3> t, v;
  for (std::size_t k = 0; k < 3; ++k) {
    t[k] = fr[k] * len;
    const auto p = PointRef::on_edge(std::string(edge_id), t[k]);
    v[k] = green_value(graph, mu, p, p);
  }
  const Quadratic q = interpolate(t, v);
  const Rational t4 = diagonal_check_fraction() * len;
  const auto p4 = PointRef::on_edge(std::string(edge_id), t4);
  if (q(t4) != green_value(graph, mu, p4, p4)) {
    throw InterpolationMismatch("diagonal of the Green's function is not quadratic on edge '" +
                                std::string(edge_id) + "'");
  }
  return q;
}

std::vector<Quadratic> green_diagonal_all(const MetrizedGraph& graph, const Measure& mu) {
  std::vector<Quadratic> out;
  out.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) out.push_back(green_diagonal(graph, mu, e.id));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<double> discrete_oracle(const MetrizedGraph& graph, const Measure& mu, const PointRef& y,
                                    int segments) {
  if (segments < 2) throw std::invalid_argument("oracle needs at least 2 segments per edge");
  require_probability(graph, mu);
  const std::size_t nv = graph.vertex_count();
  const std::size_t per_edge = static_cast<std::size_t>(segments) - 1;
  const std::size_t n = nv + per_edge * graph.edge_count();

  auto node = [&](std::size_t e, int k) -> std::size_t {
    // Grid node k (0..segments) along edge e.
    const auto& edge = graph.edges()[e];
    if (k == 0) return edge.tail;
    if (k == segments) return edge.head;
    return nv + e * per_edge + static_cast<std::size_t>(k - 1);
  };

  std::vector<double> load(n, 0.0);
  std::vector<double> mass(n, 0.0);
  for (std::size_t v = 0; v < nv; ++v) mass[v] += mu.point_masses[v].to_double();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * static_cast<std::size_t>(segments) * graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const double h = graph.edges()[e].length.to_double() / segments;
    const double share = mu.edge_masses[e].to_double() / segments;
    for (int k = 0; k < segments; ++k) {
      const std::size_t a = node(e, k), b = node(e, k + 1);
      mass[a] += share / 2;
      mass[b] += share / 2;
      if (a == b) continue;
      triplets.emplace_back(a, a, 1.0 / h);
      triplets.emplace_back(b, b, 1.0 / h);
      triplets.emplace_back(a, b, -1.0 / h);
      triplets.emplace_back(b, a, -1.0 / h);
    }
  }

  std::size_t source = 0;
  const Location loc = graph.resolve(y);
  if (loc.is_vertex()) {
    source = loc.index;
  } else {
    const double frac = (loc.offset / graph.edges()[loc.index].length).to_double();
    source = node(loc.index, static_cast<int>(std::lround(frac * segments)));
  }
  for (std::size_t i = 0; i < n; ++i) load[i] = -mass[i];
  load[source] += 1.0;

  // Ground node 0 by dropping its row and column.
  const std::size_t m = n - 1;
  std::vector<double> solution(n, 0.0);
  if (m > 0) {
    std::vector<Eigen::Triplet<double>> reduced;
    reduced.reserve(triplets.size());
    for (const auto& t : triplets) {
      if (t.row() == 0 || t.col() == 0) continue;
      reduced.emplace_back(t.row() - 1, t.col() - 1, t.value());
    }
    Eigen::SparseMatrix<double> lap(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    lap.setFromTriplets(reduced.begin(), reduced.end());
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(m));
    for (std::size_t i = 1; i < n; ++i) rhs[static_cast<Eigen::Index>(i - 1)] = load[i];
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success) throw std::runtime_error("oracle factorization failed");
    const Eigen::VectorXd x = solver.solve(rhs);
    for (std::size_t i = 1; i < n; ++i) solution[i] = x[static_cast<Eigen::Index>(i - 1)];
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += mass[i] * solution[i];
  std::vector<double> out(nv);
  for (std::size_t v = 0; v < nv; ++v) out[v] = solution[v] - mean;
  return out;
}

}  // namespace admlab
