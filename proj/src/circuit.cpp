#include "admlab/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace admlab {

ExactLaplacian::ExactLaplacian(const MetrizedGraph& graph, std::size_t ground)
    : n_(graph.vertex_count()), ground_(ground) {
  if (ground >= n_) throw std::out_of_range("ground vertex out of range");

  std::vector<std::map<std::size_t, Rational>> rows(n_);
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    const Rational c = e.length.inverse();
    rows[e.tail][e.tail] += c;
    rows[e.head][e.head] += c;
    rows[e.tail][e.head] -= c;
    rows[e.head][e.tail] -= c;
  }
  // Drop the ground row and column.
  rows[ground_].clear();
  for (auto& row : rows) row.erase(ground_);

  std::vector<bool> eliminated(n_, false);
  eliminated[ground_] = true;
  steps_.reserve(n_ - 1);
  for (std::size_t step = 0; step + 1 < n_; ++step) {
    std::size_t pivot = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (eliminated[v]) continue;
      if (pivot == n_ || rows[v].size() < rows[pivot].size()) pivot = v;
    }
    auto& prow = rows[pivot];
    Step s{pivot, prow.at(pivot), {}};
    if (s.diagonal.sign() <= 0) std::abort();  // grounded Laplacian of a connected graph is positive definite
    for (const auto& [i, a_ip] : prow) {
      if (i != pivot) s.lower.emplace_back(i, a_ip / s.diagonal);
    }
    for (const auto& [i, l_ip] : s.lower) {
      auto& row_i = rows[i];
      const Rational a_ip = row_i.at(pivot);
      for (const auto& [j, l_jp] : s.lower) {
        // A[i][j] -= A[i][p] * A[p][j] / d = a_ip * l_jp
        auto [it, inserted] = row_i.try_emplace(j);
        it->second -= a_ip * l_jp;
        if (it->second.is_zero() && i != j) row_i.erase(it);
      }
      row_i.erase(pivot);
    }
    eliminated[pivot] = true;
    prow.clear();
    steps_.push_back(std::move(s));
  }
}

std::vector<Rational> ExactLaplacian::solve(const std::vector<Rational>& injections) const {
  if (injections.size() != n_) throw std::invalid_argument("injection vector has wrong size");
  Rational total;
  for (const auto& s : injections) total += s;
  if (!total.is_zero()) throw std::invalid_argument("unbalanced sources: total injection " + total.to_string());

  std::vector<Rational> x = injections;
  x[ground_] = Rational(0);
  for (const auto& s : steps_) {
    if (x[s.pivot].is_zero()) continue;
    for (const auto& [i, l] : s.lower) x[i] -= l * x[s.pivot];
  }
  for (const auto& s : steps_) x[s.pivot] /= s.diagonal;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    for (const auto& [i, l] : it->lower) x[it->pivot] -= l * x[i];
  }
  x[ground_] = Rational(0);
  return x;
}

Rational ExactLaplacian::resistance(std::size_t a, std::size_t b) const {
  if (a == b) return Rational(0);
  std::vector<Rational> s(n_);
  s[a] = Rational(1);
  s[b] = Rational(-1);
  const auto phi = solve(s);
  return phi[a] - phi[b];
}

PotentialVector solve_flow(const MetrizedGraph& graph, const std::map<std::string, Rational>& sources,
                           const std::string& ground) {
  std::vector<Rational> s(graph.vertex_count());
  for (const auto& [id, amount] : sources) s[graph.vertex_index(id)] += amount;
  ExactLaplacian lap(graph, graph.vertex_index(ground));
  return {lap.solve(s)};
}

Rational j_function(const MetrizedGraph& graph, const PointRef& zeta, const PointRef& y, const PointRef& x) {
  const Subdivision sub(graph, {zeta, y, x});
  const auto& g = sub.graph();
  const std::size_t z = g.vertex_index(sub.mapped_points()[0].id());
  const std::size_t src = g.vertex_index(sub.mapped_points()[1].id());
  const std::size_t at = g.vertex_index(sub.mapped_points()[2].id());
  if (src == z) return Rational(0);
  ExactLaplacian lap(g, z);
  std::vector<Rational> s(g.vertex_count());
  s[src] = Rational(1);
  s[z] = Rational(-1);
  return lap.solve(s)[at];
}

Rational resistance(const MetrizedGraph& graph, const PointRef& x, const PointRef& y) {
  return j_function(graph, y, x, x);
}

Rational foster_sum(const MetrizedGraph& graph) {
  ExactLaplacian lap(graph, 0);
  Rational sum;
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) continue;
    sum += lap.resistance(e.tail, e.head) / e.length;
  }
  return sum;
}

CutResistance cut_resistance(const MetrizedGraph& graph, std::string_view edge_id) {
  return cut_resistance(graph, graph.edge_index(edge_id));
}

CutResistance cut_resistance(const MetrizedGraph& graph, std::size_t edge) {
  const auto& e = graph.edges().at(edge);
  if (e.is_loop()) return Rational(0);
  if (is_bridge(graph, edge)) return InfiniteResistance{};
  std::vector<Edge> rest;
  rest.reserve(graph.edge_count() - 1);
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    if (i != edge) rest.push_back(graph.edges()[i]);
  }
  const MetrizedGraph reduced(graph.vertices(), std::move(rest));
  return ExactLaplacian(reduced, e.head).resistance(e.tail, e.head);
}

std::string to_string(const CutResistance& r) {
  if (std::holds_alternative<InfiniteResistance>(r)) return "inf";
  return std::get<Rational>(r).to_string();
}

}  // namespace admlab
