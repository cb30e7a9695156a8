#pragma once

#include "admlab/deligne.hpp"
#include "admlab/graph.hpp"
#include "admlab/invariants.hpp"
#include "admlab/ledger.hpp"

#include <json.hpp>

namespace admlab {

using Json = nlohmann::ordered_json;

/// Rationals are always encoded as "p/q" strings.
Json to_json(const Rational& r);

/// The report, with the graph text embedded when any check failed.
Json to_json(const MetrizedGraph& graph, const InvariantReport& report);
Json to_json(const LedgerReport& report);
Json to_json(const IdentityResult& result, bool with_derivation);

/// Plain-text forms used by the command-line tool.
std::string to_text(const InvariantReport& report);
std::string to_text(const LedgerReport& report);
std::string to_text(const IdentityResult& result, bool with_derivation);

}  // namespace admlab
