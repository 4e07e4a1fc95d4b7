#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/mapping.hpp"
#include "fuzzyfp/sequence.hpp"
#include "fuzzyfp/tgrid.hpp"

namespace fuzzyfp {

/// Finite surrogates for the limits n -> infinity.
struct SolveConfig {
  double eps = 1e-9;             ///< stop once step nearness >= 1 - eps on the whole grid
  std::size_t max_iter = 10000;
  TGrid grid = TGrid::standard();
  std::size_t stall_window = 50;  ///< consecutive strict decreases at grid[0] that flag divergence
  std::size_t p_max = 8;          ///< depth of the Cauchy tail check in the stopping rule
  double verify_tol = 1e-6;       ///< conclusion residuals must be >= 1 - verify_tol
  double point_tol = kPointTolerance;
  double uniqueness_tol = 1e-6;   ///< crisp distance within which limits count as equal

  /// Throws ConfigError on eps outside (0,1), max_iter < 1, stall_window < 2,
  /// p_max < 1, or non-positive tolerances.
  void validate() const;
};

enum class SolveStatus { converged, max_iter, diverging };

std::string_view to_string(SolveStatus s) noexcept;

struct Residual {
  std::string name;  ///< the claimed identity, e.g. "STz=z"
  double value = 0.0;  ///< min over the grid of the nearness of both sides
};

struct ConclusionReport {
  std::vector<Residual> residuals;
  double tol = 0.0;
  bool pass = false;
  [[nodiscard]] double min_residual() const noexcept;
};

struct FixedPointResult {
  Point z;  ///< in X
  Point w;  ///< in Y
  SolveStatus status = SolveStatus::max_iter;
  std::string reason;
  std::size_t iterations = 0;
  SequenceTrace trace_x;  ///< x_0 .. x_N
  SequenceTrace trace_y;  ///< y_1 .. y_N
  ConclusionReport conclusions;
};

/// Related-fixed-point iteration x_n = ST x_{n-1}, y_n = T x_{n-1}.
///
/// Stops when the last step of both sequences has nearness >= 1 - eps on the
/// whole grid and the tail x_{N-p}, ..., x_N (p = min(p_max, N-1)) passes the
/// same bound for every p (likewise for y). Returns z = x_N and w = T(z).
/// Flags divergence when the smaller step nearness at grid[0] has decreased
/// strictly for stall_window consecutive steps, or when an iterate leaves
/// its carrier.
FixedPointResult iterate_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x0,
                              const SolveConfig& cfg = {});

/// Interleaved scheme y_{2n-1} = A x_{2n-2}, x_{2n-1} = S y_{2n-1},
/// y_{2n} = B x_{2n-1}, x_{2n} = T y_{2n}; same stopping rules. Returns
/// z = x_N, w = y_N.
FixedPointResult iterate_quadruple(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                   const Point& x0, const SolveConfig& cfg = {});

/// Residuals of STz = z, TSw = w, Tz = w, Sw = z.
ConclusionReport verify_conclusions_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                         const Point& z, const Point& w, const TGrid& grid, double tol);

/// Residuals of SAz = z, TBz = z, BSw = w, ATw = w, Az = w, Bz = w, Sw = z, Tw = z.
ConclusionReport verify_conclusions_quadruple(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                              const Point& z, const Point& w, const TGrid& grid, double tol);

using Problem = std::variant<MapPair, MapQuadruple>;

FixedPointResult solve(const Problem& problem, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x0,
                       const SolveConfig& cfg = {});

struct UniquenessReport {
  std::vector<Point> z;  ///< limit per start, in start order
  std::vector<Point> w;
  std::vector<SolveStatus> status;
  double max_distance_z = 0.0;
  double max_distance_w = 0.0;
  double tol = 0.0;
  bool conclusive = false;  ///< every run converged
  bool unique = false;      ///< conclusive and both spreads <= tol
};

/// Solves from every start and compares the limits. Throws UsageError for
/// fewer than two starts.
UniquenessReport uniqueness_probe(const Problem& problem, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                  const std::vector<Point>& starts, const SolveConfig& cfg = {});

}  // namespace fuzzyfp
