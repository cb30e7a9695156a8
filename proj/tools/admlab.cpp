// admlab: command-line front end for the exact metrized-graph engine.

#include "admlab/circuit.hpp"
#include "admlab/deligne.hpp"
#include "admlab/green.hpp"
#include "admlab/invariants.hpp"
#include "admlab/ledger.hpp"
#include "admlab/report.hpp"
#include "admlab/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>

namespace {

using namespace admlab;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_invariants(const std::string& path, bool json) {
  const MetrizedGraph g = load_graph(path);
  const InvariantReport r = run_checks(g);
  if (json) emit(to_json(g, r));
  else std::cout << to_text(r);
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_check(const std::vector<std::string>& paths, bool json) {
  Json all = Json::array();
  bool ok = true;
  for (const auto& path : paths) {
    const MetrizedGraph g = load_graph(path);
    const InvariantReport r = run_checks(g);
    ok = ok && r.all_passed();
    if (json) {
      Json entry;
      entry["file"] = path;
      const Json report = to_json(g, r);
      for (const auto& [k, v] : report.items()) entry[k] = v;
      all.push_back(std::move(entry));
    } else {
      std::size_t passed = 0;
      for (const auto& c : r.checks) passed += c.passed ? 1 : 0;
      std::cout << (r.all_passed() ? "ok     " : "FAILED ") << path << "  " << passed << "/" << r.checks.size()
                << " checks\n";
      for (const auto& c : r.checks) {
        if (!c.passed) std::cout << "  failed: " << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
      }
      if (!r.all_passed()) std::cout << "  graph:\n" << serialize_graph(g);
    }
  }
  if (json) emit(all);
  return ok ? kOk : kCheckFailed;
}

int cmd_resistance(const std::string& path, const std::string& a, const std::string& b, bool json) {
  const MetrizedGraph g = load_graph(path);
  const Rational r = resistance(g, PointRef::parse(a), PointRef::parse(b));
  if (json) emit(Json{{"x", a}, {"y", b}, {"resistance", to_json(r)}});
  else std::cout << r.to_string() << "\n";
  return kOk;
}

int cmd_green(const std::string& path, const std::string& source, const std::string& at, bool json) {
  const MetrizedGraph g = load_graph(path);
  const Measure mu = canonical_measure(g);
  const GreenSolution sol = green_solve(g, mu, PointRef::parse(source));
  const Rational value = sol(PointRef::parse(at));
  bool ok = sol.mean_against_measure().is_zero();
  for (const auto& r : sol.flux_residuals()) ok = ok && r.is_zero();
  if (json) {
    emit(Json{{"source", source}, {"at", at}, {"value", to_json(value)}, {"defining_conditions_hold", ok}});
  } else {
    std::cout << value.to_string() << "\n";
    if (!ok) std::cout << "defining conditions violated\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_oracle(const std::string& path, const std::string& source, int segments, bool json) {
  const MetrizedGraph g = load_graph(path);
  const Measure mu = canonical_measure(g);
  const PointRef y = PointRef::parse(source);
  const auto approx = discrete_oracle(g, mu, y, segments);
  const GreenSolution exact = green_solve(g, mu, y);
  double max_error = 0;
  Json values = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Rational e = exact(PointRef::at_vertex(g.vertices()[v].id));
    max_error = std::max(max_error, std::abs(approx[v] - e.to_double()));
    values.push_back(Json{{"vertex", g.vertices()[v].id}, {"approximate", approx[v]}, {"exact", to_json(e)}});
  }
  if (json) {
    emit(Json{{"approximate", true},
              {"source", source},
              {"segments", segments},
              {"values", values},
              {"max_error", max_error},
              {"total_length", to_json(g.total_length())}});
  } else {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::printf("%-12s approx %.12g  exact %s\n", g.vertices()[v].id.c_str(), approx[v],
                  values[v]["exact"].get<std::string>().c_str());
    }
    std::printf("max error %.3e (total length %s)\n", max_error, g.total_length().to_string().c_str());
  }
  return kOk;
}

int cmd_random(std::size_t count, std::uint64_t seed, const RandomGraphParams& params, bool json) {
  const auto entries = run_sweep(seed, count, params);
  std::size_t passed = 0;
  for (const auto& e : entries) passed += e.report.all_passed() ? 1 : 0;
  if (json) {
    emit(to_json(entries, seed));
  } else {
    for (const auto& e : entries) {
      if (e.report.all_passed()) continue;
      std::cout << "FAILED graph " << e.index << " (seed " << e.seed << ")\n";
      for (const auto& c : e.report.checks) {
        if (!c.passed) std::cout << "  " << c.name << "\n";
      }
      std::cout << serialize_graph(e.graph);
    }
    std::cout << passed << "/" << entries.size() << " graphs pass all checks\n";
    for (const auto& [name, m] : minimum_margins(entries)) std::cout << "  min margin " << name << " = " << m.to_string() << "\n";
  }
  return passed == entries.size() ? kOk : kCheckFailed;
}

int cmd_ledger(const std::string& path, bool json) {
  const CurveLedger ledger = load_ledger(path);
  const LedgerReport r = evaluate(ledger);
  if (json) emit(to_json(r));
  else std::cout << to_text(r);
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_identities(const std::string& name, bool all, bool derivation, bool json) {
  std::vector<std::string> names;
  if (all || name.empty()) names = identity_names();
  else names.push_back(name);
  Json out = Json::array();
  std::size_t holds = 0;
  for (const auto& n : names) {
    const IdentityResult r = verify_identity(n);
    holds += r.holds ? 1 : 0;
    if (json) out.push_back(to_json(r, derivation));
    else std::cout << to_text(r, derivation);
  }
  if (json) emit(out);
  else std::cout << holds << "/" << names.size() << " identities hold\n";
  return holds == names.size() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact potential theory on metrized graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON");

  std::string file, a, b, source, at, ident;
  std::vector<std::string> files;
  int segments = 64;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  RandomGraphParams params;
  std::string check = "all";
  bool all = false, derivation = false;

  auto* inv = app.add_subcommand("invariants", "Invariants and checks of one graph");
  inv->add_option("file", file, "Graph file")->required();
  inv->add_flag("--json", json);

  auto* chk = app.add_subcommand("check", "Run every exact check on graph files");
  chk->add_option("files", files, "Graph files")->required();
  chk->add_flag("--json", json);

  auto* res = app.add_subcommand("resistance", "Effective resistance between two points");
  res->add_option("file", file)->required();
  res->add_option("a", a, "vertex:<id> or edge:<id>@<p>/<q>")->required();
  res->add_option("b", b)->required();
  res->add_flag("--json", json);

  auto* grn = app.add_subcommand("green", "Value of the canonical Green's function");
  grn->add_option("file", file)->required();
  grn->add_option("--source", source)->required();
  grn->add_option("--at", at)->required();
  grn->add_flag("--json", json);

  auto* orc = app.add_subcommand("oracle", "Floating-point grid approximation at the vertices");
  orc->add_option("file", file)->required();
  orc->add_option("--source", source)->required();
  orc->add_option("--segments", segments)->check(CLI::Range(2, 1 << 20));
  orc->add_flag("--json", json);

  auto* rnd = app.add_subcommand("random", "Check random graphs");
  rnd->add_option("--count", count)->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  rnd->add_option("--seed", seed);
  rnd->add_option("--max-vertices", params.max_vertices)->check(CLI::Range(1, 64));
  rnd->add_option("--max-edges", params.max_edges)->check(CLI::Range(0, 128));
  rnd->add_option("--min-genus", params.min_genus)->check(CLI::Range(2, 64));
  rnd->add_option("--max-genus", params.max_genus)->check(CLI::Range(2, 64));
  rnd->add_option("--check", check)->check(CLI::IsMember({"all"}));
  rnd->add_flag("--json", json);

  auto* led = app.add_subcommand("ledger", "Assemble a curve ledger");
  led->add_option("file", file)->required();
  led->add_flag("--json", json);

  auto* ids = app.add_subcommand("identities", "Verify the pairing identities");
  ids->add_option("name", ident);
  ids->add_flag("--all", all);
  ids->add_flag("--show-derivation", derivation);
  ids->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*inv) return cmd_invariants(file, json);
    if (*chk) return cmd_check(files, json);
    if (*res) return cmd_resistance(file, a, b, json);
    if (*grn) return cmd_green(file, source, at, json);
    if (*orc) return cmd_oracle(file, source, segments, json);
    if (*rnd) {
      if (params.max_genus < params.min_genus) throw std::invalid_argument("--max-genus below --min-genus");
      return cmd_random(count, seed, params, json);
    }
    if (*led) return cmd_ledger(file, json);
    if (*ids) return cmd_identities(ident, all, derivation, json);
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
