#include "admlab/ledger.hpp"

#include "admlab/invariants.hpp"
#include "admlab/parallel.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace admlab {

void validate(const CurveLedger& ledger) {
  if (ledger.genus < 2) throw std::invalid_argument("ledger genus must be at least 2");
  std::set<std::string> names;
  for (const auto& p : ledger.places) {
    if (!names.insert(p.name).second) throw std::invalid_argument("duplicate place '" + p.name + "'");
    if (p.weight.sign() <= 0) throw std::invalid_argument("place '" + p.name + "' has non-positive weight");
    if (genus(p.graph) != ledger.genus) {
      throw std::invalid_argument("place '" + p.name + "' has a reduction graph of genus " +
                                  std::to_string(genus(p.graph)) + ", expected " + std::to_string(ledger.genus));
    }
  }
}

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string value_of(std::string_view field, std::string_view key, std::size_t line) {
  if (field.size() <= key.size() || field.substr(0, key.size()) != key || field[key.size()] != '=') {
    throw ParseError(line, "expected '" + std::string(key) + "=...'");
  }
  return std::string(field.substr(key.size() + 1));
}

Rational rational_field(std::string_view field, std::string_view key, std::size_t line) {
  try {
    return Rational::parse(value_of(field, key, line));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

CurveLedger parse_ledger(std::string_view text, const std::string& base_dir) {
  CurveLedger ledger;
  bool header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto f = fields_of(line);
    if (f.empty()) continue;
    if (f[0] == "ledger") {
      if (header) throw ParseError(line_no, "duplicate ledger header");
      if (f.size() != 3) throw ParseError(line_no, "expected 'ledger g=<int> deg_lambda=<p>/<q>'");
      const Rational g = rational_field(f[1], "g", line_no);
      if (!g.is_integer()) throw ParseError(line_no, "genus must be an integer");
      ledger.genus = std::stol(g.to_string());
      ledger.deg_lambda = rational_field(f[2], "deg_lambda", line_no);
      header = true;
    } else if (f[0] == "place") {
      if (!header) throw ParseError(line_no, "place before ledger header");
      if (f.size() != 4) throw ParseError(line_no, "expected 'place <name> weight=<p>/<q> graph=<path>'");
      if (!is_valid_identifier(f[1])) throw ParseError(line_no, "invalid place name '" + std::string(f[1]) + "'");
      LedgerPlace p{std::string(f[1]), rational_field(f[2], "weight", line_no), value_of(f[3], "graph", line_no),
                    MetrizedGraph({{"v", 0}}, {})};
      const auto path = (std::filesystem::path(base_dir) / p.graph_path).string();
      try {
        p.graph = load_graph(path);
      } catch (const ParseError& e) {
        throw ParseError(line_no, "in graph '" + p.graph_path + "' line " + std::to_string(e.line()) + ": " + e.what());
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      ledger.places.push_back(std::move(p));
    } else {
      throw ParseError(line_no, "unknown declaration '" + std::string(f[0]) + "'");
    }
  }
  if (!header) throw ParseError(line_no, "missing ledger header");
  try {
    validate(ledger);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return ledger;
}

CurveLedger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ledger file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ledger(buffer.str(), std::filesystem::path(path).parent_path().string());
}

Rational faltings_constant(long g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  return Rational(3, 5 * (2 * g - 1) * (3 * g - 1));
}

namespace {

BoundResult bound(const Rational& value, const Rational& threshold) {
  const Rational margin = value - threshold;
  return {threshold, margin.sign() >= 0, margin};
}

}  // namespace

LedgerReport evaluate(const CurveLedger& ledger) {
  validate(ledger);
  LedgerReport r;
  r.genus = ledger.genus;
  r.deg_lambda = ledger.deg_lambda;
  r.places.resize(ledger.places.size());
  parallel_for(ledger.places.size(), [&](std::size_t i) {
    const auto& p = ledger.places[i];
    PlaceInvariants inv{p.name, p.weight, p.graph.total_length(), Rational(0), Rational(0)};
    const GraphAnalysis a(p.graph);
    inv.epsilon = a.epsilon();
    inv.phi = a.phi();
    r.places[i] = std::move(inv);
  });
  for (const auto& p : r.places) {
    r.sum_delta += p.weight * p.delta;
    r.sum_epsilon += p.weight * p.epsilon;
    r.sum_phi += p.weight * p.phi;
  }
  r.omega_sq = Rational(12) * ledger.deg_lambda - r.sum_delta - r.sum_epsilon;
  if (r.omega_sq + r.sum_delta + r.sum_epsilon != Rational(12) * ledger.deg_lambda) std::abort();
  r.dejong = bound(r.omega_sq, Rational(2, 3 * ledger.genus - 1) * r.sum_phi);
  r.faltings = bound(r.omega_sq, faltings_constant(ledger.genus) * ledger.deg_lambda);
  return r;
}

Rational omega_sq(const CurveLedger& ledger) { return evaluate(ledger).omega_sq; }
BoundResult dejong_bound(const CurveLedger& ledger) { return evaluate(ledger).dejong; }
BoundResult faltings_bound(const CurveLedger& ledger) { return evaluate(ledger).faltings; }

Bigness2Constants bigness2_constants(long g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  const Rational product(static_cast<long>((3 * g - 1) * (2 * g - 1)));
  Bigness2Constants c{Rational(1) + Rational(39, 2) * product, Rational(20) * product, Rational(0)};
  c.coefficient = Rational(12) / c.c_round;
  if (c.c_exact > c.c_round) std::abort();
  return c;
}

Rational isotriviality_floor(long g, long characteristic) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  if (characteristic < 0) throw std::invalid_argument("characteristic must be non-negative");
  const long base = characteristic == 3 ? 4 : 3;
  return Rational::power(Rational(base), -4 * g * g);
}

}  // namespace admlab
