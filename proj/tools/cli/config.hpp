#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyfp/carrier.hpp"
#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/harness.hpp"
#include "fuzzyfp/solver.hpp"
#include "fuzzyfp/tgrid.hpp"
#include "fuzzyfp/tnorm.hpp"

namespace fuzzyfp::cli {

using nlohmann::json;

struct AxiomSettings {
  std::size_t tnorm_samples = 1000;
  std::size_t triples = 1000;
  std::uint64_t seed = 42;
  std::vector<TNormKind> tnorms{TNormKind::minimum, TNormKind::product, TNormKind::lukasiewicz};
};

struct HypothesisSettings {
  std::vector<Point> points_x;
  std::vector<Point> points_y;
  std::size_t random_x = 0;  ///< extra carrier points drawn from seed
  std::size_t random_y = 0;
  std::uint64_t seed = 7;
  bool exclude_diagonal = true;
  bool dump_ratios = false;
};

struct SuiteSettings {
  std::uint64_t seed = 1;
  std::vector<InstanceSpec> groups;        ///< one template per group; seeds assigned at expansion
  std::vector<std::size_t> group_counts;
  SuiteOptions options;

  /// Instance specs with seeds seed, seed + 1, ... across all groups in order.
  [[nodiscard]] std::vector<InstanceSpec> expand() const;
};

/// Parsed and validated configuration document.
///
/// Sections: carrier, metric, maps, grid, axioms, hypotheses, solve, suite.
/// Every section is optional in the document; commands check for the ones
/// they need. Unknown keys anywhere are rejected.
struct RunConfig {
  std::optional<CarrierSpace> carrier_x;
  std::optional<CarrierSpace> carrier_y;
  std::optional<FuzzyMetric> mu;
  std::optional<FuzzyMetric> nu;
  bool separate_y = false;  ///< Y carrier or metric given explicitly
  TNorm tnorm{TNormKind::product};
  Scheme scheme = Scheme::pair;
  std::optional<Problem> problem;
  TGrid grid = TGrid::standard();
  std::string grid_source = "default";  ///< provenance echoed in reports
  AxiomSettings axioms;
  HypothesisSettings hypotheses;
  SolveConfig solve;
  std::optional<Point> x0;
  std::vector<Point> starts;
  SuiteSettings suite;
};

/// Throws ConfigError with a JSON-pointer style location on any schema error.
RunConfig parse_config(const json& doc);
/// Reads and parses a file; I/O and JSON syntax errors become ConfigError.
RunConfig load_config(const std::filesystem::path& path);

/// Applies --seed and --t-max overrides.
void apply_overrides(RunConfig& cfg, std::optional<std::uint64_t> seed, std::optional<double> t_max);

/// Defaults table, echoed into every report.
json defaults_json();

}  // namespace fuzzyfp::cli
