#pragma once

#include "admlab/graph.hpp"
#include "admlab/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace admlab {

struct LedgerPlace {
  std::string name;
  Rational weight;
  std::string graph_path;  // as written in the ledger file
  MetrizedGraph graph;
};

/// Global data of a curve over a function field: genus, Hodge degree, and the reduction
/// graphs of its bad places with positive weights.
struct CurveLedger {
  long genus = 2;
  Rational deg_lambda;
  std::vector<LedgerPlace> places;
};

/// Validates genus ≥ 2, positive weights, unique place names, and that every place graph
/// has genus exactly `genus`. Throws std::invalid_argument.
void validate(const CurveLedger& ledger);

/// Ledger text format. Graph paths are resolved relative to `base_dir`. Errors are
/// ParseError with a line number.
CurveLedger parse_ledger(std::string_view text, const std::string& base_dir);
CurveLedger load_ledger(const std::string& path);

struct PlaceInvariants {
  std::string name;
  Rational weight;
  Rational delta;  // total length
  Rational epsilon;
  Rational phi;
};

struct BoundResult {
  Rational threshold;
  bool satisfied = false;
  Rational margin;
};

struct LedgerReport {
  long genus = 0;
  Rational deg_lambda;
  std::vector<PlaceInvariants> places;
  Rational sum_delta, sum_epsilon, sum_phi;  // weighted
  Rational omega_sq;
  BoundResult dejong;
  BoundResult faltings;

  bool all_passed() const { return dejong.satisfied && faltings.satisfied; }
};

/// Per-place invariants (computed in parallel) and the assembled totals and bounds.
LedgerReport evaluate(const CurveLedger& ledger);

/// 12·deg_lambda − Σ_v w_v (δ_v + ε_v).
Rational omega_sq(const CurveLedger& ledger);
/// omega_sq ≥ (2/(3g − 1))·Σ_v w_v φ_v.
BoundResult dejong_bound(const CurveLedger& ledger);
/// omega_sq ≥ 3/(5(2g − 1)(3g − 1))·deg_lambda.
BoundResult faltings_bound(const CurveLedger& ledger);

/// 3/(5(2g − 1)(3g − 1)).
Rational faltings_constant(long g);

struct Bigness2Constants {
  Rational c_exact;      // 1 + (39/2)(3g − 1)(2g − 1)
  Rational c_round;      // 20(3g − 1)(2g − 1)
  Rational coefficient;  // 12 / c_round
};
Bigness2Constants bigness2_constants(long g);

/// 3^(−4g²), or 4^(−4g²) in characteristic 3.
Rational isotriviality_floor(long g, long characteristic);

}  // namespace admlab
