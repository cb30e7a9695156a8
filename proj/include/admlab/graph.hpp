#pragma once

#include "admlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace admlab {

/// Structural problems with a graph: unknown ids, bad lengths, disconnection.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax errors in the graph text format; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Vertex {
  std::string id;
  long genus = 0;
};

/// An edge runs from `tail` (offset 0) to `head` (offset = length).
struct Edge {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;

  bool is_loop() const { return tail == head; }
};

/// A point of the metrized graph, named by ids as in the text formats.
class PointRef {
 public:
  static PointRef at_vertex(std::string vertex_id);
  static PointRef on_edge(std::string edge_id, Rational offset);
  /// "vertex:<id>" or "edge:<id>@<p>/<q>".
  static PointRef parse(std::string_view text);

  bool is_vertex() const { return !offset_.has_value(); }
  const std::string& id() const { return id_; }
  /// Offset from the edge's tail; only meaningful for edge points.
  const Rational& offset() const { return *offset_; }
  std::string to_string() const;

  friend bool operator==(const PointRef&, const PointRef&) = default;

 private:
  std::string id_;
  std::optional<Rational> offset_;
};

/// A point resolved against a concrete graph by index.
struct Location {
  enum class Kind { Vertex, EdgeInterior };
  Kind kind = Kind::Vertex;
  std::size_t index = 0;  // vertex index or edge index
  Rational offset;        // edge interior only, 0 < offset < length

  bool is_vertex() const { return kind == Kind::Vertex; }
};

/// Finite connected graph with genus marks on vertices and positive rational edge
/// lengths. Loops and parallel edges are allowed. Immutable once constructed.
class MetrizedGraph {
 public:
  /// Validates ids, endpoints, lengths and connectivity; throws GraphError.
  MetrizedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  /// Like find_*, but throw GraphError naming the missing id.
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  /// Number of edge ends at v; a loop contributes two.
  long valence(std::size_t v) const;
  /// Edge indices touching v; a loop appears once.
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incidence_[v]; }

  Rational total_length() const;

  /// Throws GraphError for unknown ids or offsets outside (0, length).
  Location resolve(const PointRef& point) const;
  PointRef point_ref(const Location& location) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Coefficients indexed by vertex index of the graph they were computed on.
struct Divisor {
  std::vector<long> coefficients;

  long degree() const;
  bool is_effective() const;
};

/// Graph text format: one `vertex` or `edge` declaration per line, '#' comments.
MetrizedGraph parse_graph(std::string_view text);
MetrizedGraph load_graph(const std::string& path);
/// Canonical text form; parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const MetrizedGraph& graph);

bool is_valid_identifier(std::string_view id);

/// Σ g_v + |E| − |V| + 1.
long genus(const MetrizedGraph& graph);

/// K_v = 2 g_v − 2 + valence(v). Requires genus ≥ 1; the degree is checked against 2g − 2.
Divisor canonical_divisor(const MetrizedGraph& graph);

/// 0 if removing the edge interior leaves the graph connected, otherwise min(h, g − h)
/// where h is the genus of one side.
long edge_type(const MetrizedGraph& graph, std::string_view edge_id);
long edge_type(const MetrizedGraph& graph, std::size_t edge);

/// Whether the graph minus the interior of `edge` is still connected.
bool is_bridge(const MetrizedGraph& graph, std::size_t edge);

/// Result of inserting genus-0 vertices at interior points.
///
/// Original vertices keep their indices; new vertices are appended. Each original
/// edge becomes a chain of pieces oriented like the original.
class Subdivision {
 public:
  Subdivision(const MetrizedGraph& original, const std::vector<PointRef>& points);

  const MetrizedGraph& graph() const { return graph_; }
  /// Images of the requested points, in request order (always vertex refs).
  const std::vector<PointRef>& mapped_points() const { return mapped_; }
  /// Image of any point of the original graph.
  PointRef map(const PointRef& original_point) const;
  Location map(const Location& original_location) const;

  /// Original edge a piece came from, and the piece's start offset on it.
  std::pair<std::size_t, Rational> piece_origin(std::size_t piece) const { return piece_origin_[piece]; }
  /// Pieces of an original edge in order from its tail.
  const std::vector<std::size_t>& pieces(std::size_t original_edge) const { return pieces_[original_edge]; }
  /// Vertices [0, original_vertex_count()) are the original ones.
  std::size_t original_vertex_count() const { return original_vertices_; }

 private:
  struct Cut {
    Rational offset;
    std::size_t vertex;
  };
  struct Parts;
  explicit Subdivision(Parts parts);

  MetrizedGraph graph_;
  std::vector<PointRef> mapped_;
  std::vector<std::vector<Cut>> cuts_;  // per original edge, sorted by offset
  std::vector<std::vector<std::size_t>> pieces_;
  std::vector<std::pair<std::size_t, Rational>> piece_origin_;
  std::size_t original_vertices_ = 0;
  std::unordered_map<std::string, std::size_t> original_edges_;
};

Subdivision subdivide(const MetrizedGraph& graph, const std::vector<PointRef>& points);

}  // namespace admlab
