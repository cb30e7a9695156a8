// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "admlab/circuit.hpp"
#include "admlab/deligne.hpp"
#include "admlab/green.hpp"
#include "admlab/invariants.hpp"
#include "admlab/ledger.hpp"
#include "admlab/parallel.hpp"
#include "admlab/report.hpp"
#include "admlab/sweep.hpp"

#include "../unit/support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace admlab;

namespace {

constexpr std::uint64_t kSweepSeed = 20240601;
constexpr std::size_t kSweepCount = 60;

Rational R(const char* s) { return Rational::parse(s); }

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note = what;
      pass = false;
    }
  }
};

const std::vector<SweepEntry>& sweep() {
  static const std::vector<SweepEntry> entries = run_sweep(kSweepSeed, kSweepCount, {});
  return entries;
}

bool check_passed(const InvariantReport& r, const char* name) {
  const CheckResult* c = r.find(name);
  return c != nullptr && c->passed;
}

Outcome exact_vs_oracle() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto& entries = sweep();
  std::vector<double> err256(entries.size()), err512(entries.size()), length(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const MetrizedGraph& g = entries[i].graph;
    const Measure mu = canonical_measure(g);
    const PointRef y = PointRef::at_vertex(g.vertices()[0].id);
    const GreenSolution exact = green_solve(g, mu, y);
    const auto a = discrete_oracle(g, mu, y, 256);
    const auto b = discrete_oracle(g, mu, y, 512);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const double e = exact(PointRef::at_vertex(g.vertices()[v].id)).to_double();
      err256[i] = std::max(err256[i], std::abs(a[v] - e));
      err512[i] = std::max(err512[i], std::abs(b[v] - e));
    }
    length[i] = g.total_length().to_double();
  });
  double worst_rel = 0, worst_ratio = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double floor = 1e-9 * length[i];
    out.require(err256[i] <= 0.01 * length[i], "graph " + std::to_string(i) + " outside 1% of length at N=256");
    out.require(err512[i] <= std::max(0.6 * err256[i], floor),
                "graph " + std::to_string(i) + " error did not shrink from N=256 to N=512");
    worst_rel = std::max(worst_rel, err256[i] / length[i]);
    if (err256[i] > floor) worst_ratio = std::max(worst_ratio, err512[i] / err256[i]);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds <= 60, "runtime above 60 s");
  out.require(entries.size() >= 50, "fewer than 50 graphs");
  if (out.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu graphs, max err/length %.2e, max ratio %.3f, %.1f s", entries.size(), worst_rel,
                  worst_ratio, seconds);
    out.note = buf;
  }
  return out;
}

Outcome defining_properties() {
  Outcome out;
  std::size_t points = 0;
  for (const auto& e : sweep()) {
    const auto& g = e.graph;
    for (const char* name : {"flux_balance", "mean_zero", "green_symmetry", "measure_mass_one", "admissibility_constant"}) {
      out.require(check_passed(e.report, name), std::string(name) + " failed on graph " + std::to_string(e.index));
    }
    // a graph without edges is a single point; there is nothing further to sample
    if (g.edge_count() == 0) {
      ++points;
      continue;
    }
    const std::size_t samples = g.vertex_count() + sample_fractions(g).size() * g.edge_count();
    out.require(samples >= 10, "fewer than 10 sample points on graph " + std::to_string(e.index));
  }
  if (out.pass) out.note = std::to_string(sweep().size()) + " graphs (" + std::to_string(points) + " single-point)";
  return out;
}

Outcome epsilon_consistency() {
  Outcome out;
  for (const auto& e : sweep()) {
    out.require(e.report.epsilon == e.report.epsilon_alt && check_passed(e.report, "epsilon_two_ways"),
                "graph " + std::to_string(e.index));
  }
  return out;
}

Outcome inequalities() {
  Outcome out;
  for (const auto& e : sweep()) {
    const Rational l = e.report.total_length;
    out.require(e.report.epsilon <= Rational(2 * e.report.genus - 2) * l, "epsilon bound, graph " + std::to_string(e.index));
    out.require(Rational(39) * e.report.phi >= l, "39 phi >= l, graph " + std::to_string(e.index));
  }
  if (out.pass) {
    const auto m = minimum_margins(sweep());
    out.note = "min margins " + m.at("epsilon_upper_bound").to_string() + ", " + m.at("cinkir_39phi_ge_l").to_string();
  }
  return out;
}

Outcome fixtures() {
  using testing::GridModel;
  Outcome out;
  struct Case {
    const char* name;
    MetrizedGraph graph;
    Rational eps, phi;
    std::size_t delta_index;
    Rational delta;
  };
  const Case cases[] = {{"dumbbell", testing::dumbbell(), 1, 1, 1, 1},
                        {"circle", testing::circle(), R("1/6"), R("1/12"), 0, 1}};
  for (const auto& c : cases) {
    const Rational e = epsilon(c.graph), f = phi(c.graph);
    const auto d = delta_invariants(c.graph);
    out.require(e == c.eps && f == c.phi, std::string(c.name) + " invariants");
    out.require(d.at(c.delta_index) == c.delta, std::string(c.name) + " delta");
    // independent float oracle
    const Measure mu = canonical_measure(c.graph);
    const Divisor k = canonical_divisor(c.graph);
    const GridModel grid(c.graph, mu, 256);
    const long gen = genus(c.graph);
    out.require(std::abs(grid.epsilon(gen, k) - e.to_double()) < 1e-4, std::string(c.name) + " epsilon vs grid");
    out.require(std::abs(grid.phi(gen, k) - f.to_double()) < 1e-4, std::string(c.name) + " phi vs grid");
  }
  const Measure mu = canonical_measure(testing::theta());
  for (const auto& m : mu.edge_masses) out.require(m == R("1/3"), "theta edge mass");
  return out;
}

Outcome resistance_laws() {
  Outcome out;
  const auto path = parse_graph("vertex a genus=1\nvertex b genus=0\nvertex c genus=1\n"
                                "edge x a b length=1/2\nedge y b c length=2/3\n");
  out.require(resistance(path, PointRef::at_vertex("a"), PointRef::at_vertex("c")) == R("7/6"), "series sum");
  const Rational L = R("3/2");
  const auto circle = testing::circle(L.to_string());
  for (const char* t : {"1/5", "1/4", "1/3", "1/2", "5/7"}) {
    const Rational d = R(t) * L;
    out.require(resistance(circle, PointRef::at_vertex("v"), PointRef::on_edge("c", d)) == d * (L - d) / L,
                std::string("circle offset ") + t);
  }
  for (const auto& e : sweep()) {
    out.require(foster_sum(e.graph) == Rational(static_cast<long>(e.graph.vertex_count()) - 1),
                "foster, graph " + std::to_string(e.index));
    for (const char* name : {"resistance_symmetry", "resistance_le_length", "resistance_triangle", "foster_identity"}) {
      out.require(check_passed(e.report, name), std::string(name) + ", graph " + std::to_string(e.index));
    }
  }
  return out;
}

Outcome symbolic_catalog() {
  Outcome out;
  for (const auto& name : identity_names()) out.require(verify_identity(name).holds, name);
  const auto lb = verify_identity("lower_bound");
  out.require(lb.lhs.coefficient("<w,w>") == PolyGD::parse("12g-4"), "lower_bound <w,w> coefficient");
  out.require(lb.lhs.coefficient("Phi") == PolyGD::parse("-8"), "lower_bound Phi coefficient");
  const auto iso = verify_identity("iso3_1_pairing");
  out.require(iso.lhs.coefficient("<w,w>") == PolyGD::parse("16g(g-1)^3"), "iso3_1_pairing coefficient");
  if (out.pass) {
    out.note = "lower_bound (" + lb.lhs.coefficient("<w,w>").to_string() + ", " + lb.lhs.coefficient("Phi").to_string() +
               "), iso3_1_pairing " + iso.lhs.coefficient("<w,w>").to_string();
  }
  return out;
}

Outcome ledger_coherence() {
  Outcome out;
  CurveLedger l;
  l.genus = 2;
  l.deg_lambda = 1;
  l.places.push_back({"p", 1, "", testing::circle()});
  const LedgerReport r = evaluate(l);
  out.require(r.omega_sq + r.sum_delta + r.sum_epsilon == Rational(12) * l.deg_lambda, "Noether balance");
  out.require(r.omega_sq == R("65/6"), "circle ledger omega^2");
  out.require(r.dejong.satisfied && r.dejong.margin > Rational(0), "de Jong bound");
  out.require(r.faltings.satisfied && r.faltings.margin > Rational(0), "function-field bound");

  CurveLedger mixed;
  mixed.genus = 3;
  mixed.deg_lambda = R("9/2");
  for (std::size_t i = 0; i < 4; ++i) {
    mixed.places.push_back({"q" + std::to_string(i), Rational(static_cast<long>(i) + 1, 3), "",
                            random_graph(task_seed(5, i), {8, 12, 3, 3, 16, 8})});
  }
  const LedgerReport m = evaluate(mixed);
  out.require(m.omega_sq + m.sum_delta + m.sum_epsilon == Rational(12) * mixed.deg_lambda, "Noether balance, genus 3");

  for (long g = 2; g <= 100; ++g) {
    out.require(faltings_constant(g) == Rational(12) / Rational(20 * (2 * g - 1) * (3 * g - 1)),
                "constant at g=" + std::to_string(g));
  }
  if (out.pass) {
    out.note = "omega^2 = " + r.omega_sq.to_string() + ", margins " + r.dejong.margin.to_string() + " and " +
               r.faltings.margin.to_string();
  }
  return out;
}

std::string full_report() {
  Json j;
  j["sweep"] = to_json(run_sweep(kSweepSeed, 12, {}), kSweepSeed);
  CurveLedger l;
  l.genus = 2;
  l.deg_lambda = 1;
  l.places.push_back({"p", 1, "", testing::circle()});
  j["ledger"] = to_json(evaluate(l));
  Json ids = Json::array();
  for (const auto& name : identity_names()) ids.push_back(to_json(verify_identity(name), true));
  j["identities"] = ids;
  return j.dump(2);
}

Outcome determinism() {
  Outcome out;
  const std::string a = full_report();
  const std::string b = full_report();
  out.require(a == b, "reports differ");
  if (out.pass) out.note = std::to_string(a.size()) + " bytes identical";
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 exact vs oracle", exact_vs_oracle},     {"2 defining properties", defining_properties},
      {"3 epsilon consistency", epsilon_consistency}, {"4 inequality sweep", inequalities},
      {"5 closed-form fixtures", fixtures},        {"6 resistance laws", resistance_laws},
      {"7 symbolic catalog", symbolic_catalog},    {"8 ledger coherence", ledger_coherence},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s  %-24s %s\n", o.pass ? "PASS" : "FAIL", name, o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
