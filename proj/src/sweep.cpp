#include "admlab/sweep.hpp"

#include "admlab/parallel.hpp"

#include <optional>

namespace admlab {

std::vector<SweepEntry> run_sweep(std::uint64_t seed, std::size_t count, const RandomGraphParams& params) {
  std::vector<std::optional<SweepEntry>> slots(count);
  parallel_for(count, [&](std::size_t i) {
    const std::uint64_t s = task_seed(seed, i);
    MetrizedGraph g = random_graph(s, params);
    InvariantReport r = run_checks(g);
    slots[i].emplace(SweepEntry{i, s, std::move(g), std::move(r)});
  });
  std::vector<SweepEntry> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::map<std::string, Rational> minimum_margins(const std::vector<SweepEntry>& entries) {
  std::map<std::string, Rational> out;
  for (const auto& e : entries) {
    for (const auto& c : e.report.checks) {
      if (!c.margin) continue;
      auto [it, inserted] = out.try_emplace(c.name, *c.margin);
      if (!inserted && *c.margin < it->second) it->second = *c.margin;
    }
  }
  return out;
}

Json to_json(const std::vector<SweepEntry>& entries, std::uint64_t seed) {
  Json j;
  j["seed"] = seed;
  j["count"] = entries.size();
  std::size_t passed = 0;
  Json graphs = Json::array();
  for (const auto& e : entries) {
    if (e.report.all_passed()) ++passed;
    Json g = to_json(e.graph, e.report);
    Json entry;
    entry["index"] = e.index;
    entry["seed"] = e.seed;
    for (auto& [k, v] : g.items()) entry[k] = v;
    graphs.push_back(std::move(entry));
  }
  j["passed"] = passed;
  j["failed"] = entries.size() - passed;
  Json margins = Json::object();
  for (const auto& [name, m] : minimum_margins(entries)) margins[name] = to_json(m);
  j["minimum_margins"] = std::move(margins);
  j["graphs"] = std::move(graphs);
  return j;
}

}  // namespace admlab
