#pragma once

#include "admlab/graph.hpp"
#include "admlab/green.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace admlab::testing {

inline MetrizedGraph circle(const std::string& length = "1") {
  return parse_graph("vertex v genus=1\nedge c v v length=" + length + "\n");
}

inline MetrizedGraph dumbbell(const std::string& length = "1") {
  return parse_graph("vertex u genus=1\nvertex w genus=1\nedge b u w length=" + length + "\n");
}

inline MetrizedGraph theta() {
  return parse_graph(
      "vertex u genus=0\nvertex w genus=0\n"
      "edge a u w length=1\nedge b u w length=1\nedge c u w length=1\n");
}

inline MetrizedGraph single_vertex(int genus = 2) { return parse_graph("vertex v genus=" + std::to_string(genus) + "\n"); }

/// Same graph with every length multiplied by `factor`.
inline MetrizedGraph rescaled(const MetrizedGraph& g, const Rational& factor) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.length *= factor;
  return MetrizedGraph(g.vertices(), edges);
}

/// Dense floating-point grid model used as an independent check of the exact pipeline:
/// every edge is cut into `n` pieces, mass of each piece split between its two ends.
struct GridModel {
  int nodes = 0;
  std::vector<double> mass;   // lumped μ per node
  std::vector<int> vertex;    // grid node of each original vertex
  Eigen::MatrixXd green;      // discrete g(x, y), recentred so that Σ_x m_x g(x, y) = 0
  double length = 0;

  GridModel(const MetrizedGraph& g, const Measure& mu, int n) {
    nodes = static_cast<int>(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex.push_back(static_cast<int>(v));
    std::vector<std::tuple<int, int, double>> links;
    mass.assign(g.vertex_count(), 0.0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) mass[v] = mu.point_masses[v].to_double();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      const double h = edge.length.to_double() / n;
      const double piece = mu.edge_masses[e].to_double() / n;
      length += edge.length.to_double();
      int prev = static_cast<int>(edge.tail);
      for (int k = 1; k <= n; ++k) {
        int next;
        if (k == n) {
          next = static_cast<int>(edge.head);
        } else {
          next = nodes++;
          mass.push_back(0.0);
        }
        links.emplace_back(prev, next, 1.0 / h);
        mass[prev] += piece / 2;
        mass[next] += piece / 2;
        prev = next;
      }
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(nodes, nodes);
    for (auto [a, b, c] : links) {
      if (a == b) continue;
      lap(a, a) += c;
      lap(b, b) += c;
      lap(a, b) -= c;
      lap(b, a) -= c;
    }
    // Ground node 0, solve L g = e_y − m for every y, then recentre.
    const int m = nodes - 1;
    green = Eigen::MatrixXd::Zero(nodes, nodes);
    if (m > 0) {
      const Eigen::MatrixXd reduced = lap.bottomRightCorner(m, m);
      const Eigen::LDLT<Eigen::MatrixXd> ldlt(reduced);
      Eigen::VectorXd mvec = Eigen::Map<const Eigen::VectorXd>(mass.data(), nodes);
      for (int y = 0; y < nodes; ++y) {
        Eigen::VectorXd rhs = -mvec;
        rhs(y) += 1.0;
        Eigen::VectorXd col = Eigen::VectorXd::Zero(nodes);
        col.tail(m) = ldlt.solve(rhs.tail(m));
        col.array() -= mvec.dot(col);
        green.col(y) = col;
      }
    }
  }

  double diagonal_mass() const {
    double s = 0;
    for (int i = 0; i < nodes; ++i) s += mass[i] * green(i, i);
    return s;
  }
  double diagonal_canonical(const Divisor& k) const {
    double s = 0;
    for (std::size_t v = 0; v < vertex.size(); ++v) s += static_cast<double>(k.coefficients[v]) * green(vertex[v], vertex[v]);
    return s;
  }
  double epsilon(long genus, const Divisor& k) const {
    return static_cast<double>(2 * genus - 2) * diagonal_mass() + diagonal_canonical(k);
  }
  double phi(long genus, const Divisor& k) const {
    return -length / 4 + (static_cast<double>(10 * genus + 2) * diagonal_mass() - diagonal_canonical(k)) / 4;
  }
};

}  // namespace admlab::testing
