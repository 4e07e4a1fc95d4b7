#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/mapping.hpp"
#include "fuzzyfp/sequence.hpp"
#include "fuzzyfp/tgrid.hpp"

namespace fuzzyfp {

/// Finite stand-in for the universally quantified points of the contraction
/// conditions. Pair-scheme tuples range over points_x^2 (primal) or points_y^2
/// (dual); quadruple tuples over points_x^2 x points_y^2; self-map tuples
/// over points_x x points_y with both sets in the single space.
struct SampleSet {
  std::vector<Point> points_x;
  std::vector<Point> points_y;
  TGrid grid = TGrid::standard();
  /// Skip pair-scheme tuples whose two points coincide within point_tol.
  bool exclude_diagonal = true;
  double point_tol = kPointTolerance;
};

/// Left side without the factor k, and the right side, of one inequality
/// instance. The inequality holds for k iff k >= rhs / lhs.
struct LhsRhs {
  double lhs = 0.0;
  double rhs = 0.0;
  [[nodiscard]] double ratio() const noexcept { return rhs / lhs; }
};

struct HypothesisWitness {
  std::vector<std::string> labels;  ///< e.g. {"x", "x'"}
  std::vector<Point> points;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct RatioRow {
  std::vector<std::size_t> indices;  ///< sample indices in label order
  double t = 0.0;
  double ratio = 0.0;
};

/// Best sampled contraction constant for one inequality.
///
/// k_hat is the largest rhs/lhs over admitted tuples (first one wins on ties,
/// enumeration order: sample indices in label order, then grid t). The
/// inequality "holds on the sample" for every k >= k_hat; the sampled
/// hypothesis with k in (0, 1) holds iff k_hat < 1.
struct HypothesisReport {
  std::string inequality;
  double k_hat = 0.0;
  std::optional<HypothesisWitness> witness;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;  ///< "diagonal", "condition", "codomain"
  std::vector<double> grid;
  std::size_t sample_x = 0;
  std::size_t sample_y = 0;
  bool exclude_diagonal = true;
  std::vector<RatioRow> ratios;  ///< filled only when requested

  [[nodiscard]] bool holds() const noexcept { return evaluated > 0 && k_hat < 1.0; }
  void skip(const std::string& reason, std::size_t n = 1);
};

struct EstimateOptions {
  bool dump_ratios = false;
};

// --- Pair scheme ----------------------------------------------------------

/// lhs = mu(STx, STx', t);
/// rhs = min{mu(x, x', t), mu(x, STx, t), mu(x', STx', t), nu(Tx, Tx', t)}.
LhsRhs pair_lhs_rhs(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
                    const Point& x2, double t);

/// lhs = nu(TSy, TSy', t);
/// rhs = min{nu(y, y', t), nu(y, TSy, t), nu(y', TSy', t), mu(Sy, Sy', t)}.
LhsRhs pair_dual_lhs_rhs(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& y,
                         const Point& y2, double t);

/// k_hat over points_x^2 x grid. Throws EmptySampleError if nothing was admitted.
HypothesisReport estimate_k_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                 const SampleSet& samples, EstimateOptions options = {});
/// k_hat over points_y^2 x grid for the dual inequality.
HypothesisReport estimate_k_pair_dual(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                      const SampleSet& samples, EstimateOptions options = {});

// --- Quadruple scheme ------------------------------------------------------

/// All quantities of the x- and y-inequalities at one tuple.
struct QuadTerms {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
  double lhs_x = 0.0;  ///< mu(SAx, TBx', t)
  double lhs_y = 0.0;  ///< nu(BSy, ATy', t)
};

QuadTerms quad_terms(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
                     const Point& x2, const Point& y, const Point& y2, double t);
double quad_f(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t);
double quad_g(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t);
double quad_h(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t);

/// Reports for the x- and y-inequalities. A tuple enters the x-report only if
/// f < h < 1 and the y-report only if g < h < 1; ratios are
/// (f/h)/mu(SAx, TBx', t) and (g/h)/nu(BSy, ATy', t). Throws EmptySampleError only if both are empty;
/// an empty single report has evaluated == 0.
std::pair<HypothesisReport, HypothesisReport> estimate_k_quad(const MapQuadruple& quad, const FuzzyMetric& mu,
                                                              const FuzzyMetric& nu, const SampleSet& samples,
                                                              EstimateOptions options = {});

// --- Self-map quadruple (one space) ----------------------------------------

/// lhs_x holds mu(SAx, TBy, t), lhs_y holds mu(BSx, ATy, t).
QuadTerms self_quad_terms(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t);
double self_quad_f(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t);
double self_quad_g(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t);
double self_quad_h(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t);

/// x- and y-reports over points_x x points_y x grid, with the same
/// admission rule as estimate_k_quad.
std::pair<HypothesisReport, HypothesisReport> estimate_k_self_quad(const MapQuadruple& quad, const FuzzyMetric& mu,
                                                              const SampleSet& samples, EstimateOptions options = {});

// --- Recurrences along iteration traces ------------------------------------

struct RecurrenceViolation {
  std::string equation;  ///< "x", "y" (pair); "x-odd", "x-even", "y-odd", "y-even" (interleaved)
  std::size_t n = 0;     ///< index of the bounded step (x_n, x_{n+1}) or (y_n, y_{n+1})
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Diagnostic evaluation of k * lhs >= rhs along a trace (checked in ratio
/// form rhs / lhs <= k, matching k_hat). Steps whose previous step is
/// degenerate (points equal within point_tol) are skipped: the diagonal is
/// excluded from k_hat the same way.
struct RecurrenceReport {
  double k = 0.0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;     ///< largest rhs / lhs seen
  double worst_margin = 0.0;  ///< min of k - rhs / lhs (negative iff violated)
  std::optional<RecurrenceViolation> first_violation;
  std::map<std::string, std::size_t> violations_by_equation;
};

/// Step recurrences of the pair scheme. trace_x holds x_0..x_N
/// (first_index 0), trace_y holds y_1..y_M (first_index 1). Throws UsageError
/// if either trace has fewer than 2 points or k <= 0.
RecurrenceReport check_recurrence_pair(const SequenceTrace& trace_x, const SequenceTrace& trace_y,
                                       const FuzzyMetric& mu, const FuzzyMetric& nu, double k, const TGrid& grid,
                                       double point_tol = kPointTolerance);

/// Step recurrences along the interleaved quadruple trace. The traces must
/// follow y_{2n-1} = A x_{2n-2}, x_{2n-1} = S y_{2n-1}, y_{2n} = B x_{2n-1},
/// x_{2n} = T y_{2n}; this is verified and violations throw UsageError.
RecurrenceReport check_recurrence_quad(const SequenceTrace& trace_x, const SequenceTrace& trace_y,
                                       const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                       double k, const TGrid& grid, double point_tol = kPointTolerance);

}  // namespace fuzzyfp
