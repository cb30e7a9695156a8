#include "admlab/invariants.hpp"

#include "admlab/circuit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace admlab {

bool InvariantReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* InvariantReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Rational total_length(const MetrizedGraph& graph) { return graph.total_length(); }

namespace {

void require_genus_two(const MetrizedGraph& graph) {
  if (genus(graph) < 2) throw std::invalid_argument("invariant needs genus >= 2, got " + std::to_string(genus(graph)));
}

}  // namespace

std::vector<Rational> delta_invariants(const MetrizedGraph& graph) {
  require_genus_two(graph);
  std::vector<Rational> delta(static_cast<std::size_t>(genus(graph) / 2 + 1));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    delta.at(static_cast<std::size_t>(edge_type(graph, e))) += graph.edges()[e].length;
  }
  return delta;
}

std::vector<Rational> sample_fractions(const MetrizedGraph& graph) {
  std::vector<Rational> f{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
  if (graph.edge_count() == 0) return f;
  // Add j/m for growing m until there are at least ten sample points overall.
  for (long m = 5; graph.vertex_count() + f.size() * graph.edge_count() < 10; ++m) {
    for (long j = 1; j < m; ++j) {
      Rational r(j, m);
      if (std::find(f.begin(), f.end(), r) == f.end()) f.push_back(r);
    }
  }
  std::sort(f.begin(), f.end());
  return f;
}

// ---------------------------------------------------------------------------

GraphAnalysis::GraphAnalysis(const MetrizedGraph& graph)
    : graph_(graph), genus_(admlab::genus(graph)), mu_(canonical_measure(graph)), canonical_(canonical_divisor(graph)) {
  const auto fractions = sample_fractions(graph_);
  std::vector<PointRef> cut_points;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) sample_points_.push_back(PointRef::at_vertex(graph_.vertices()[v].id));
  for (const auto& e : graph_.edges()) {
    for (const auto& fr : fractions) {
      cut_points.push_back(PointRef::on_edge(e.id, fr * e.length));
      sample_points_.push_back(cut_points.back());
    }
  }
  subdivision_.emplace(graph_, cut_points);
  const auto& work = subdivision_->graph();
  for (const auto& p : sample_points_) samples_.push_back(work.vertex_index(subdivision_->map(p).id()));

  const Measure work_mu = transfer(mu_, *subdivision_);
  const GreenKernel kernel(work, work_mu);
  const std::size_t n = work.vertex_count();
  green_.assign(n, {});
  std::vector<std::vector<Rational>> by_source(n);
  for (std::size_t y = 0; y < n; ++y) {
    const PiecewiseQuadratic f = kernel.solve(y);
    const auto residual = flux_residuals(work, work_mu, y, f);
    if (std::any_of(residual.begin(), residual.end(), [](const Rational& r) { return !r.is_zero(); })) flux_ok_ = false;
    if (!integrate(work, f, work_mu).is_zero()) mean_ok_ = false;
    by_source[y] = f.vertex_values;
  }
  for (std::size_t x = 0; x < n; ++x) {
    green_[x].resize(n);
    for (std::size_t y = 0; y < n; ++y) green_[x][y] = by_source[y][x];
  }

  const ExactLaplacian lap(work, 0);
  grounded_inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> s(n);
    if (i != 0) {
      s[i] = Rational(1);
      s[0] = Rational(-1);
    }
    grounded_inverse_[i] = lap.solve(s);
  }

  // Diagonal per original edge: interpolate at 1/3, 1/2, 2/3, then confirm at every other
  // sample fraction and at both endpoints.
  const std::size_t per_edge = fractions.size();
  auto sample_of = [&](std::size_t e, const Rational& fr) {
    const auto it = std::find(fractions.begin(), fractions.end(), fr);
    return samples_[graph_.vertex_count() + e * per_edge + static_cast<std::size_t>(it - fractions.begin())];
  };
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const auto& edge = graph_.edges()[e];
    std::array<Rational, 3> t, v;
    for (std::size_t k = 0; k < 3; ++k) {
      t[k] = diagonal_fractions()[k] * edge.length;
      const std::size_t s = sample_of(e, diagonal_fractions()[k]);
      v[k] = green_[s][s];
    }
    const Quadratic q = interpolate(t, v);
    for (const auto& fr : fractions) {
      const std::size_t s = sample_of(e, fr);
      if (q(fr * edge.length) != green_[s][s]) {
        throw InterpolationMismatch("Green's diagonal is not quadratic on edge '" + edge.id + "'");
      }
    }
    if (q(Rational(0)) != green_[edge.tail][edge.tail] || q(edge.length) != green_[edge.head][edge.head]) {
      throw InterpolationMismatch("Green's diagonal is discontinuous at an endpoint of edge '" + edge.id + "'");
    }
    diagonal_.push_back(q);
  }
}

Rational GraphAnalysis::resistance(std::size_t x, std::size_t y) const {
  if (x == y) return Rational(0);
  return grounded_inverse_[x][x] + grounded_inverse_[y][y] - Rational(2) * grounded_inverse_[x][y];
}

Rational GraphAnalysis::diagonal_mass() const {
  PiecewiseQuadratic f;
  f.vertex_values.reserve(graph_.vertex_count());
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) f.vertex_values.push_back(green_[v][v]);
  f.edges = diagonal_;
  return integrate(graph_, f, mu_);
}

Rational GraphAnalysis::diagonal_canonical() const {
  Rational sum;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) sum += Rational(canonical_.coefficients[v]) * green_[v][v];
  return sum;
}

Rational GraphAnalysis::epsilon() const {
  return Rational(2 * genus_ - 2) * diagonal_mass() + diagonal_canonical();
}

Rational GraphAnalysis::phi() const {
  return -graph_.total_length() / Rational(4) +
         (Rational(10 * genus_ + 2) * diagonal_mass() - diagonal_canonical()) / Rational(4);
}

Rational GraphAnalysis::epsilon_via_resistance() const {
  const auto fractions = sample_fractions(graph_);
  const std::size_t per_edge = fractions.size();
  auto sample_of = [&](std::size_t e, const Rational& fr) {
    const auto it = std::find(fractions.begin(), fractions.end(), fr);
    return samples_[graph_.vertex_count() + e * per_edge + static_cast<std::size_t>(it - fractions.begin())];
  };
  Rational total;
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    const long k = canonical_.coefficients[v];
    if (k == 0) continue;
    PiecewiseQuadratic r;
    for (std::size_t w = 0; w < graph_.vertex_count(); ++w) r.vertex_values.push_back(resistance(v, w));
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
      const auto& edge = graph_.edges()[e];
      std::array<Rational, 3> t, val;
      for (std::size_t i = 0; i < 3; ++i) {
        t[i] = diagonal_fractions()[i] * edge.length;
        val[i] = resistance(v, sample_of(e, diagonal_fractions()[i]));
      }
      const Quadratic q = interpolate(t, val);
      for (const auto& fr : fractions) {
        if (q(fr * edge.length) != resistance(v, sample_of(e, fr))) {
          throw InterpolationMismatch("resistance from '" + graph_.vertices()[v].id + "' is not quadratic on edge '" +
                                      edge.id + "'");
        }
      }
      r.edges.push_back(q);
    }
    total += Rational(k) * integrate(graph_, r, mu_);
  }
  return total;
}

// ---------------------------------------------------------------------------

Rational epsilon(const MetrizedGraph& graph) {
  require_genus_two(graph);
  return GraphAnalysis(graph).epsilon();
}

Rational epsilon_via_resistance(const MetrizedGraph& graph) {
  require_genus_two(graph);
  return GraphAnalysis(graph).epsilon_via_resistance();
}

Rational phi(const MetrizedGraph& graph) {
  require_genus_two(graph);
  return GraphAnalysis(graph).phi();
}

namespace {

CheckResult exact_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::nullopt, std::move(detail)};
}

CheckResult margin_check(std::string name, Rational margin, std::string detail = {}) {
  const bool ok = margin.sign() >= 0;
  return {std::move(name), ok, std::move(margin), std::move(detail)};
}

}  // namespace

InvariantReport run_checks(const MetrizedGraph& graph) {
  require_genus_two(graph);
  InvariantReport report;
  report.genus = genus(graph);
  report.total_length = graph.total_length();
  report.delta = delta_invariants(graph);

  const GraphAnalysis analysis(graph);
  report.epsilon = analysis.epsilon();
  report.epsilon_alt = analysis.epsilon_via_resistance();
  report.phi = analysis.phi();
  const Rational& ell = report.total_length;
  const long g = report.genus;
  auto& checks = report.checks;

  checks.push_back(exact_check("canonical_degree", analysis.canonical().degree() == 2 * g - 2));
  checks.push_back(exact_check("measure_mass_one", analysis.measure().total() == Rational(1),
                               "total " + analysis.measure().total().to_string()));
  checks.push_back(exact_check("measure_nonnegative", analysis.measure().is_nonnegative()));
  checks.push_back(exact_check("flux_balance", analysis.flux_balanced()));
  checks.push_back(exact_check("mean_zero", analysis.mean_zero()));

  const auto& samples = analysis.sample_vertices();
  bool symmetric = true;
  for (std::size_t i = 0; i < samples.size() && symmetric; ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (analysis.green(samples[i], samples[j]) != analysis.green(samples[j], samples[i])) {
        symmetric = false;
        break;
      }
    }
  }
  checks.push_back(exact_check("green_symmetry", symmetric));

  // g(x,x) + g(K,x) must not depend on x.
  std::optional<Rational> constant;
  bool constant_ok = true;
  for (std::size_t s : samples) {
    Rational value = analysis.green(s, s);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      value += Rational(analysis.canonical().coefficients[v]) * analysis.green(v, s);
    }
    if (!constant) constant = value;
    else if (*constant != value) constant_ok = false;
  }
  checks.push_back(exact_check("admissibility_constant", constant_ok,
                               std::to_string(samples.size()) + " sample points, value " +
                                   (constant ? constant->to_string() : std::string("n/a"))));

  checks.push_back(exact_check("epsilon_two_ways", report.epsilon == report.epsilon_alt,
                               report.epsilon.to_string() + " vs " + report.epsilon_alt.to_string()));
  checks.push_back(margin_check("epsilon_upper_bound", Rational(2 * g - 2) * ell - report.epsilon,
                                "(2g-2)l - epsilon"));
  checks.push_back(margin_check("epsilon_nonnegative", report.epsilon));
  checks.push_back(margin_check("cinkir_39phi_ge_l", Rational(39) * report.phi - ell, "39 phi - l"));
  Rational delta_sum;
  for (const auto& d : report.delta) delta_sum += d;
  checks.push_back(exact_check("delta_sum_is_length", delta_sum == ell));

  // Resistance laws over the sample points: 100 pairs and 100 triples from a fixed stream.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  Rational worst_bound = ell;
  bool symmetric_r = true;
  for (int k = 0; k < 100; ++k) {
    const std::size_t a = samples[pick(rng)], b = samples[pick(rng)];
    const Rational r = analysis.resistance(a, b);
    if (r != analysis.resistance(b, a)) symmetric_r = false;
    worst_bound = std::min(worst_bound, ell - r);
  }
  checks.push_back(exact_check("resistance_symmetry", symmetric_r));
  checks.push_back(margin_check("resistance_le_length", worst_bound, "min over 100 pairs of l - r(x,y)"));
  std::optional<Rational> worst_triangle;
  for (int k = 0; k < 100; ++k) {
    const std::size_t x = samples[pick(rng)], z = samples[pick(rng)], w = samples[pick(rng)];
    const Rational slack = analysis.resistance(x, z) + analysis.resistance(z, w) - analysis.resistance(x, w);
    if (!worst_triangle || slack < *worst_triangle) worst_triangle = slack;
  }
  checks.push_back(margin_check("resistance_triangle", *worst_triangle, "min over 100 triples"));
  const Rational foster = foster_sum(graph);
  checks.push_back(exact_check("foster_identity",
                               foster == Rational(static_cast<long>(graph.vertex_count()) - 1),
                               "sum " + foster.to_string()));
  return report;
}

}  // namespace admlab
