#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "fuzzyfp/axioms.hpp"
#include "fuzzyfp/harness.hpp"
#include "fuzzyfp/hypotheses.hpp"
#include "fuzzyfp/solver.hpp"

namespace fuzzyfp::cli {

using nlohmann::json;

/// Finite numbers as-is, NaN and infinities as null.
json number_json(double v);
json point_json(const Point& p);
json grid_json(const TGrid& grid);
json generator_json();

json to_json(const AxiomViolation& v);
json to_json(const AxiomReport& r);
json to_json(const HypothesisReport& r);
json to_json(const ConclusionReport& r);
json to_json(const UniquenessReport& r);
json to_json(const SolveConfig& cfg);
json to_json(const InstanceSpec& spec);
json to_json(const SuiteOptions& options);
json to_json(const VerdictRow& row);
/// Aggregate counts only.
json counts_json(const SuiteVerdict& v);

/// One row per (n, t): n, t, mu_step_x, nu_step_y, x coordinates, y coordinates.
/// Step columns hold the nearness of (x_n, x_{n+1}) and (y_n, y_{n+1}); cells
/// with no value are empty.
void write_trace_csv(std::ostream& out, const FixedPointResult& result);
void write_verdict_csv(std::ostream& out, const SuiteVerdict& verdict);

/// %.17g
std::string format_number(double v);

}  // namespace fuzzyfp::cli
