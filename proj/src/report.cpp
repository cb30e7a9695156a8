#include "admlab/report.hpp"

#include <sstream>

namespace admlab {

Json to_json(const Rational& r) { return r.to_fraction_string(); }

namespace {

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["margin"] = c.margin ? to_json(*c.margin) : Json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

std::string margin_text(const BoundResult& b) {
  return std::string(b.satisfied ? "ok" : "FAILED") + " (threshold " + b.threshold.to_string() + ", margin " +
         b.margin.to_string() + ")";
}

}  // namespace

Json to_json(const MetrizedGraph& graph, const InvariantReport& report) {
  Json j;
  j["genus"] = report.genus;
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["total_length"] = to_json(report.total_length);
  Json delta = Json::array();
  for (const auto& d : report.delta) delta.push_back(to_json(d));
  j["delta"] = std::move(delta);
  j["epsilon"] = to_json(report.epsilon);
  j["epsilon_alt"] = to_json(report.epsilon_alt);
  j["phi"] = to_json(report.phi);
  j["checks"] = checks_json(report.checks);
  j["passed"] = report.all_passed();
  if (!report.all_passed()) j["graph"] = serialize_graph(graph);
  return j;
}

Json to_json(const LedgerReport& report) {
  Json j;
  j["genus"] = report.genus;
  j["deg_lambda"] = to_json(report.deg_lambda);
  Json places = Json::array();
  for (const auto& p : report.places) {
    Json q;
    q["name"] = p.name;
    q["weight"] = to_json(p.weight);
    q["delta"] = to_json(p.delta);
    q["epsilon"] = to_json(p.epsilon);
    q["phi"] = to_json(p.phi);
    places.push_back(std::move(q));
  }
  j["places"] = std::move(places);
  j["sum_delta"] = to_json(report.sum_delta);
  j["sum_epsilon"] = to_json(report.sum_epsilon);
  j["sum_phi"] = to_json(report.sum_phi);
  j["omega_sq"] = to_json(report.omega_sq);
  for (const auto& [name, b] : {std::pair{"dejong_bound", &report.dejong}, std::pair{"faltings_bound", &report.faltings}}) {
    Json bj;
    bj["threshold"] = to_json(b->threshold);
    bj["satisfied"] = b->satisfied;
    bj["margin"] = to_json(b->margin);
    j[name] = std::move(bj);
  }
  j["passed"] = report.all_passed();
  return j;
}

Json to_json(const IdentityResult& r, bool with_derivation) {
  Json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["holds"] = r.holds;
  j["derived"] = r.lhs.to_string();
  j["expected"] = r.rhs.to_string();
  Json coefficients = Json::object();
  for (const auto& [atom, c] : r.lhs.terms()) coefficients[atom.key()] = c.to_string();
  j["coefficients"] = std::move(coefficients);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_derivation) {
    Json steps = Json::array();
    for (const auto& [rule, count] : r.trace.rules) steps.push_back({{"rule", rule}, {"applications", count}});
    j["derivation"] = std::move(steps);
  }
  return j;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "genus        " << r.genus << "\n";
  out << "total_length " << r.total_length.to_string() << "\n";
  for (std::size_t i = 0; i < r.delta.size(); ++i) out << "delta_" << i << "      " << r.delta[i].to_string() << "\n";
  out << "epsilon      " << r.epsilon.to_string() << "\n";
  out << "epsilon_alt  " << r.epsilon_alt.to_string() << "\n";
  out << "phi          " << r.phi.to_string() << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "  ok     " : "  FAILED ") << c.name;
    if (c.margin) out << "  margin " << c.margin->to_string();
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  return out.str();
}

std::string to_text(const LedgerReport& r) {
  std::ostringstream out;
  out << "genus " << r.genus << ", deg_lambda " << r.deg_lambda.to_string() << ", " << r.places.size() << " place(s)\n";
  for (const auto& p : r.places) {
    out << "  " << p.name << "  weight " << p.weight.to_string() << "  delta " << p.delta.to_string() << "  epsilon "
        << p.epsilon.to_string() << "  phi " << p.phi.to_string() << "\n";
  }
  out << "sum_delta   " << r.sum_delta.to_string() << "\n";
  out << "sum_epsilon " << r.sum_epsilon.to_string() << "\n";
  out << "sum_phi     " << r.sum_phi.to_string() << "\n";
  out << "omega_sq    " << r.omega_sq.to_string() << "\n";
  out << "de Jong bound  " << margin_text(r.dejong) << "\n";
  out << "Faltings bound " << margin_text(r.faltings) << "\n";
  return out.str();
}

std::string to_text(const IdentityResult& r, bool with_derivation) {
  std::ostringstream out;
  out << (r.holds ? "holds  " : "FAILED ") << r.name << "\n";
  out << "  " << r.statement << "\n";
  out << "  derived:  " << r.lhs.to_string() << "\n";
  out << "  expected: " << r.rhs.to_string() << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (with_derivation) {
    for (const auto& [rule, count] : r.trace.rules) out << "    " << rule << "  (x" << count << ")\n";
  }
  return out.str();
}

}  // namespace admlab
