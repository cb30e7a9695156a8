#include "admlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace admlab {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// PointRef

PointRef PointRef::at_vertex(std::string vertex_id) {
  PointRef p;
  p.id_ = std::move(vertex_id);
  return p;
}

PointRef PointRef::on_edge(std::string edge_id, Rational offset) {
  PointRef p;
  p.id_ = std::move(edge_id);
  p.offset_ = std::move(offset);
  return p;
}

PointRef PointRef::parse(std::string_view text) {
  constexpr std::string_view kVertex = "vertex:";
  constexpr std::string_view kEdge = "edge:";
  if (text.starts_with(kVertex)) {
    std::string_view id = text.substr(kVertex.size());
    if (!is_valid_identifier(id)) throw std::invalid_argument("bad vertex id in point '" + std::string(text) + "'");
    return at_vertex(std::string(id));
  }
  if (text.starts_with(kEdge)) {
    std::string_view rest = text.substr(kEdge.size());
    const auto at = rest.find('@');
    if (at == std::string_view::npos) {
      throw std::invalid_argument("edge point needs '@<offset>': '" + std::string(text) + "'");
    }
    std::string_view id = rest.substr(0, at);
    if (!is_valid_identifier(id)) throw std::invalid_argument("bad edge id in point '" + std::string(text) + "'");
    return on_edge(std::string(id), Rational::parse(rest.substr(at + 1)));
  }
  throw std::invalid_argument("point must be 'vertex:<id>' or 'edge:<id>@<p>/<q>', got '" + std::string(text) + "'");
}

std::string PointRef::to_string() const {
  if (is_vertex()) return "vertex:" + id_;
  return "edge:" + id_ + "@" + offset_->to_string();
}

// ---------------------------------------------------------------------------
// MetrizedGraph

namespace {

// Union-find over vertex indices, optionally skipping one edge.
std::vector<std::size_t> component_labels(std::size_t n, const std::vector<Edge>& edges,
                                          std::optional<std::size_t> skip = std::nullopt) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (skip && *skip == i) continue;
    parent[find(edges[i].tail)] = find(edges[i].head);
  }
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = find(v);
  return label;
}

}  // namespace

MetrizedGraph::MetrizedGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError("graph has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (!is_valid_identifier(v.id)) throw GraphError("invalid vertex id '" + v.id + "'");
    if (v.genus < 0) throw GraphError("negative genus at vertex '" + v.id + "'");
    if (!vertex_lookup_.emplace(v.id, i).second) throw GraphError("duplicate vertex id '" + v.id + "'");
  }
  incidence_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!is_valid_identifier(e.id)) throw GraphError("invalid edge id '" + e.id + "'");
    if (e.tail >= vertices_.size() || e.head >= vertices_.size()) {
      throw GraphError("edge '" + e.id + "' references an unknown vertex");
    }
    if (e.length.sign() <= 0) throw GraphError("edge '" + e.id + "' has non-positive length");
    if (!edge_lookup_.emplace(e.id, i).second) throw GraphError("duplicate edge id '" + e.id + "'");
    incidence_[e.tail].push_back(i);
    if (!e.is_loop()) incidence_[e.head].push_back(i);
  }
  const auto label = component_labels(vertices_.size(), edges_);
  if (std::any_of(label.begin(), label.end(), [&](std::size_t l) { return l != label[0]; })) {
    throw GraphError("graph is disconnected");
  }
}

std::optional<std::size_t> MetrizedGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MetrizedGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MetrizedGraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("unknown vertex '" + std::string(id) + "'");
}

std::size_t MetrizedGraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge '" + std::string(id) + "'");
}

long MetrizedGraph::valence(std::size_t v) const {
  long val = 0;
  for (std::size_t e : incidence_[v]) val += edges_[e].is_loop() ? 2 : 1;
  return val;
}

Rational MetrizedGraph::total_length() const {
  Rational total;
  for (const auto& e : edges_) total += e.length;
  return total;
}

Location MetrizedGraph::resolve(const PointRef& point) const {
  Location loc;
  if (point.is_vertex()) {
    loc.kind = Location::Kind::Vertex;
    loc.index = vertex_index(point.id());
    return loc;
  }
  loc.kind = Location::Kind::EdgeInterior;
  loc.index = edge_index(point.id());
  loc.offset = point.offset();
  if (loc.offset.sign() <= 0 || loc.offset >= edges_[loc.index].length) {
    throw GraphError("offset " + loc.offset.to_string() + " out of range for edge '" + point.id() +
                     "' of length " + edges_[loc.index].length.to_string());
  }
  return loc;
}

PointRef MetrizedGraph::point_ref(const Location& location) const {
  if (location.is_vertex()) return PointRef::at_vertex(vertices_.at(location.index).id);
  return PointRef::on_edge(edges_.at(location.index).id, location.offset);
}

long Divisor::degree() const { return std::accumulate(coefficients.begin(), coefficients.end(), 0L); }

bool Divisor::is_effective() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](long c) { return c >= 0; });
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view key_value(std::string_view field, std::string_view key, std::size_t line_no) {
  if (!field.starts_with(key) || field.size() <= key.size() || field[key.size()] != '=') {
    throw ParseError(line_no, "expected '" + std::string(key) + "=<value>', got '" + std::string(field) + "'");
  }
  return field.substr(key.size() + 1);
}

}  // namespace

MetrizedGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "vertex") {
      if (fields.size() != 3) throw ParseError(line_no, "expected 'vertex <id> genus=<n>'");
      if (!is_valid_identifier(fields[1])) throw ParseError(line_no, "invalid identifier '" + std::string(fields[1]) + "'");
      const auto g = key_value(fields[2], "genus", line_no);
      if (g.empty() || !std::all_of(g.begin(), g.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(line_no, "genus must be a non-negative integer");
      }
      if (g.size() > 9) throw ParseError(line_no, "genus too large");
      std::string id(fields[1]);
      if (!seen.emplace(id, vertices.size()).second) throw ParseError(line_no, "duplicate vertex '" + id + "'");
      vertices.push_back({id, std::stol(std::string(g))});
    } else if (fields[0] == "edge") {
      if (fields.size() != 5) throw ParseError(line_no, "expected 'edge <id> <vertex> <vertex> length=<p>/<q>'");
      if (!is_valid_identifier(fields[1])) throw ParseError(line_no, "invalid identifier '" + std::string(fields[1]) + "'");
      Edge e;
      e.id = std::string(fields[1]);
      for (int k = 0; k < 2; ++k) {
        auto it = seen.find(std::string(fields[2 + k]));
        if (it == seen.end()) throw ParseError(line_no, "unknown vertex '" + std::string(fields[2 + k]) + "'");
        (k == 0 ? e.tail : e.head) = it->second;
      }
      try {
        e.length = Rational::parse(key_value(fields[4], "length", line_no));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(line_no, ex.what());
      }
      if (e.length.sign() <= 0) throw ParseError(line_no, "non-positive length " + e.length.to_string());
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unknown declaration '" + std::string(fields[0]) + "'");
    }
  }
  if (vertices.empty()) throw ParseError(line_no, "no vertices declared");
  try {
    return MetrizedGraph(std::move(vertices), std::move(edges));
  } catch (const GraphError& ex) {
    throw ParseError(line_no, ex.what());
  }
}

MetrizedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const MetrizedGraph& graph) {
  std::ostringstream out;
  for (const auto& v : graph.vertices()) out << "vertex " << v.id << " genus=" << v.genus << "\n";
  for (const auto& e : graph.edges()) {
    out << "edge " << e.id << " " << graph.vertices()[e.tail].id << " " << graph.vertices()[e.head].id
        << " length=" << e.length.to_string() << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Combinatorics

long genus(const MetrizedGraph& graph) {
  long g = 0;
  for (const auto& v : graph.vertices()) g += v.genus;
  return g + static_cast<long>(graph.edge_count()) - static_cast<long>(graph.vertex_count()) + 1;
}

Divisor canonical_divisor(const MetrizedGraph& graph) {
  const long g = genus(graph);
  if (g < 1) throw GraphError("canonical divisor needs genus >= 1");
  Divisor k;
  k.coefficients.reserve(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    k.coefficients.push_back(2 * graph.vertices()[v].genus - 2 + graph.valence(v));
  }
  if (k.degree() != 2 * g - 2) std::abort();  // handshake lemma makes this impossible
  return k;
}

bool is_bridge(const MetrizedGraph& graph, std::size_t edge) {
  const auto& e = graph.edges().at(edge);
  if (e.is_loop()) return false;
  const auto label = component_labels(graph.vertex_count(), graph.edges(), edge);
  return label[e.tail] != label[e.head];
}

long edge_type(const MetrizedGraph& graph, std::string_view edge_id) {
  return edge_type(graph, graph.edge_index(edge_id));
}

long edge_type(const MetrizedGraph& graph, std::size_t edge) {
  if (!is_bridge(graph, edge)) return 0;
  const auto label = component_labels(graph.vertex_count(), graph.edges(), edge);
  const std::size_t side = label[graph.edges()[edge].tail];
  long h = 0, verts = 0, edges = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (label[v] != side) continue;
    h += graph.vertices()[v].genus;
    ++verts;
  }
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    if (i != edge && label[graph.edges()[i].tail] == side) ++edges;
  }
  h += edges - verts + 1;
  return std::min(h, genus(graph) - h);
}

// ---------------------------------------------------------------------------
// Subdivision

struct Subdivision::Parts {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<PointRef> mapped;
  std::vector<std::vector<Cut>> cuts;
  std::vector<std::vector<std::size_t>> pieces;
  std::vector<std::pair<std::size_t, Rational>> piece_origin;
  std::size_t original_vertices = 0;
  std::unordered_map<std::string, std::size_t> original_edges;
};

namespace {

std::string fresh_id(const std::string& base, std::unordered_map<std::string, int>& taken) {
  std::string id = base;
  while (taken.count(id)) id += "_";
  taken.emplace(id, 0);
  return id;
}

}  // namespace

Subdivision::Subdivision(Parts parts)
    : graph_(std::move(parts.vertices), std::move(parts.edges)),
      mapped_(std::move(parts.mapped)),
      cuts_(std::move(parts.cuts)),
      pieces_(std::move(parts.pieces)),
      piece_origin_(std::move(parts.piece_origin)),
      original_vertices_(parts.original_vertices),
      original_edges_(std::move(parts.original_edges)) {}

Subdivision::Subdivision(const MetrizedGraph& original, const std::vector<PointRef>& points)
    : Subdivision([&] {
        Parts p;
        p.original_vertices = original.vertex_count();
        p.vertices = original.vertices();
        std::vector<Location> locs;
        locs.reserve(points.size());
        for (const auto& pt : points) locs.push_back(original.resolve(pt));

        std::vector<std::vector<Rational>> offsets(original.edge_count());
        for (const auto& loc : locs) {
          if (!loc.is_vertex()) offsets[loc.index].push_back(loc.offset);
        }
        std::unordered_map<std::string, int> taken;
        for (const auto& v : original.vertices()) taken.emplace(v.id, 0);
        for (std::size_t ei = 0; ei < original.edge_count(); ++ei) {
          taken.emplace(original.edges()[ei].id, 0);
          p.original_edges.emplace(original.edges()[ei].id, ei);
        }

        p.cuts.resize(original.edge_count());
        p.pieces.resize(original.edge_count());
        for (std::size_t ei = 0; ei < original.edge_count(); ++ei) {
          auto& offs = offsets[ei];
          std::sort(offs.begin(), offs.end());
          offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
          const auto& e = original.edges()[ei];
          if (offs.empty()) {
            p.pieces[ei].push_back(p.edges.size());
            p.piece_origin.emplace_back(ei, Rational(0));
            p.edges.push_back(e);
            continue;
          }
          std::size_t prev_vertex = e.tail;
          Rational prev_offset(0);
          for (std::size_t k = 0; k < offs.size(); ++k) {
            const std::size_t nv = p.vertices.size();
            p.vertices.push_back({fresh_id(e.id + "_s" + std::to_string(k + 1), taken), 0});
            p.cuts[ei].push_back({offs[k], nv});
            p.pieces[ei].push_back(p.edges.size());
            p.piece_origin.emplace_back(ei, prev_offset);
            p.edges.push_back({fresh_id(e.id + "_p" + std::to_string(k + 1), taken), prev_vertex, nv, offs[k] - prev_offset});
            prev_vertex = nv;
            prev_offset = offs[k];
          }
          p.pieces[ei].push_back(p.edges.size());
          p.piece_origin.emplace_back(ei, prev_offset);
          p.edges.push_back({fresh_id(e.id + "_p" + std::to_string(offs.size() + 1), taken), prev_vertex, e.head,
                             e.length - prev_offset});
        }
        for (const auto& loc : locs) {
          if (loc.is_vertex()) {
            p.mapped.push_back(PointRef::at_vertex(original.vertices()[loc.index].id));
          } else {
            const auto& cuts = p.cuts[loc.index];
            auto it = std::find_if(cuts.begin(), cuts.end(), [&](const Cut& c) { return c.offset == loc.offset; });
            p.mapped.push_back(PointRef::at_vertex(p.vertices[it->vertex].id));
          }
        }
        return p;
      }()) {}

Location Subdivision::map(const Location& original_location) const {
  if (original_location.is_vertex()) return original_location;
  const std::size_t ei = original_location.index;
  const auto& cuts = cuts_[ei];
  Rational start(0);
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (cuts[k].offset == original_location.offset) return {Location::Kind::Vertex, cuts[k].vertex, Rational(0)};
    if (original_location.offset < cuts[k].offset) {
      return {Location::Kind::EdgeInterior, pieces_[ei][k], original_location.offset - start};
    }
    start = cuts[k].offset;
  }
  return {Location::Kind::EdgeInterior, pieces_[ei].back(), original_location.offset - start};
}

PointRef Subdivision::map(const PointRef& original_point) const {
  if (original_point.is_vertex()) {
    if (graph_.vertex_index(original_point.id()) >= original_vertices_) {
      throw GraphError("unknown vertex '" + original_point.id() + "'");
    }
    return original_point;
  }
  auto it = original_edges_.find(original_point.id());
  if (it == original_edges_.end()) throw GraphError("unknown edge '" + original_point.id() + "'");
  const std::size_t ei = it->second;
  Rational length(0);
  for (std::size_t piece : pieces_[ei]) length += graph_.edges()[piece].length;
  if (original_point.offset().sign() <= 0 || original_point.offset() >= length) {
    throw GraphError("offset " + original_point.offset().to_string() + " out of range for edge '" +
                     original_point.id() + "'");
  }
  return graph_.point_ref(map(Location{Location::Kind::EdgeInterior, ei, original_point.offset()}));
}

Subdivision subdivide(const MetrizedGraph& graph, const std::vector<PointRef>& points) {
  return Subdivision(graph, points);
}

}  // namespace admlab
