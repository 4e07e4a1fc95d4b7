#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyfp/carrier.hpp"
#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/solver.hpp"
#include "fuzzyfp/tgrid.hpp"
#include "fuzzyfp/tnorm.hpp"

namespace fuzzyfp {

enum class Scheme { pair, quadruple, self_quadruple };
enum class MapFamily { affine, constant, mixed };

std::string_view to_string(Scheme s) noexcept;
std::string_view to_string(MapFamily f) noexcept;
Scheme parse_scheme(std::string_view name);
MapFamily parse_family(std::string_view name);

/// Recipe for one random problem instance.
struct InstanceSpec {
  Scheme scheme = Scheme::pair;
  std::size_t dim = 2;
  MapFamily family = MapFamily::affine;
  double factor_lo = 0.05;  ///< per-map contraction factor drawn from [factor_lo, factor_hi]
  double factor_hi = 0.9;
  FuzzyMetricForm metric = FuzzyMetricForm::induced_standard;
  CrispMetric crisp = CrispMetric::euclidean;
  TGrid grid = TGrid::standard();
  std::uint64_t seed = 1;
  double half_width = 10.0;  ///< carriers are [-half_width, half_width]^dim
  /// Diagnostic override: factors in (1, inf) on scaled orthogonal matrices,
  /// carriers unbounded. Such instances are expected to diverge.
  bool expansive = false;

  /// Throws ConfigError: empty factor range, factors outside (0,1) (or not > 1
  /// when expansive), dim 0, table metric form, non-positive half width.
  void validate() const;
};

/// A generated problem. For quadruple schemes the affine maps are anchored at
/// (anchor_z, anchor_w): A z* = B z* = w*, S w* = T w* = z*.
struct Instance {
  InstanceSpec spec;
  Problem problem;
  FuzzyMetric mu;
  FuzzyMetric nu;
  std::vector<double> factors;  ///< drawn factor per map in declaration order (T, S or A, B, S, T)
  std::optional<Point> anchor_z;
  std::optional<Point> anchor_w;
};

/// Deterministic in spec (bit-identical maps for equal specs). Contractive
/// affine maps have both the spectral and the max-row-sum norm <= factor and
/// map the carrier box into itself.
Instance gen_instance(const InstanceSpec& spec);

/// `count` copies of `base` with seeds base.seed, base.seed + 1, ...
std::vector<InstanceSpec> expand_specs(const InstanceSpec& base, std::size_t count);

struct SuiteOptions {
  std::size_t trajectory_samples = 8;
  std::size_t random_samples = 8;
  std::size_t axiom_triples = 50;
  std::size_t uniqueness_starts = 4;
  std::vector<double> vacuity_scales{10.0, 100.0};  ///< t_max multipliers for the k_hat re-runs
  TNorm tnorm{TNormKind::product};
  std::size_t workers = 1;
};

struct VerdictRow {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::pair;
  MapFamily family = MapFamily::affine;
  std::size_t dim = 0;
  bool expansive = false;
  std::vector<double> factors;
  std::size_t axiom_violations = 0;
  /// Largest k_hat over the scheme's two inequalities, per grid: the
  /// instance grid first, then one entry per vacuity scale. NaN when the
  /// sample admitted no tuple.
  std::vector<double> k_hat;
  std::vector<double> grid_t_max;
  bool hypothesis_holds = false;
  SolveStatus status = SolveStatus::max_iter;
  std::size_t iterations = 0;
  Point z;
  Point w;
  double min_residual = 0.0;
  bool conclusions_pass = false;
  bool uniqueness_conclusive = false;
  bool unique = false;
  double uniqueness_spread = 0.0;
  bool passed = false;  ///< contractive: converged, conclusions, unique; expansive: diverging
  std::string error;
};

struct SuiteVerdict {
  std::vector<VerdictRow> rows;
  std::size_t instances = 0;
  std::size_t converged = 0;
  std::size_t diverging = 0;
  std::size_t max_iter = 0;
  std::size_t conclusions_pass = 0;
  std::size_t unique = 0;
  std::size_t hypothesis_holds = 0;
  std::size_t axiom_clean = 0;
  std::size_t passed = 0;
  std::size_t errors = 0;

  [[nodiscard]] bool all_passed() const noexcept { return passed == instances; }
};

/// Runs axioms -> solve -> hypotheses -> conclusions -> uniqueness for each
/// spec. Rows keep spec order whatever the worker count. Throws UsageError
/// for an empty spec list.
SuiteVerdict run_suite(const std::vector<InstanceSpec>& specs, const SolveConfig& cfg,
                       const SuiteOptions& options = {});

/// Evaluates one instance (the unit of work of run_suite).
VerdictRow run_instance(std::size_t index, const InstanceSpec& spec, const SolveConfig& cfg,
                        const SuiteOptions& options);

}  // namespace fuzzyfp
