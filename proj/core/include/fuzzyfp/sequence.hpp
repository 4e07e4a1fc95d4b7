#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/point.hpp"
#include "fuzzyfp/tgrid.hpp"
#include "fuzzyfp/tnorm.hpp"

namespace fuzzyfp {

/// A finite stretch of a sequence together with its step nearness.
///
/// `first_index` is the sequence index of points.front() (x-sequences start at
/// 0, y-sequences of the iteration schemes at 1). step_nearness[i][k] holds
/// mu(points[i], points[i + 1], grid[k]).
struct SequenceTrace {
  std::size_t first_index = 0;
  std::vector<Point> points;
  TGrid grid = TGrid::standard();
  std::vector<std::vector<double>> step_nearness;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] bool empty() const noexcept { return points.empty(); }
  [[nodiscard]] std::size_t last_index() const noexcept { return first_index + points.size() - 1; }
  /// Point with sequence index n.
  [[nodiscard]] const Point& at(std::size_t n) const { return points.at(n - first_index); }
};

/// Builds a trace and fills its step nearness over `grid`.
SequenceTrace make_trace(std::vector<Point> points, const FuzzyMetric& fm, const TGrid& grid,
                         std::size_t first_index = 0);

/// Appends one point and its step-nearness row.
void extend_trace(SequenceTrace& trace, Point next, const FuzzyMetric& fm);

/// True iff mu(x_last, limit, t) >= 1 - eps for every t in the grid.
/// Throws UsageError for an empty trace or eps outside (0, 1).
bool is_convergent(const SequenceTrace& trace, const Point& limit, const FuzzyMetric& fm, const TGrid& grid,
                   double eps);

/// True iff mu(x_n, x_{n+p}, t) >= 1 - eps for the last n that has p_max
/// successors, every p in 1..p_max and every grid t.
/// Throws UsageError when p_max < 1, the trace has fewer than p_max + 1
/// points, or eps is outside (0, 1).
bool is_cauchy(const SequenceTrace& trace, const FuzzyMetric& fm, const TGrid& grid, double eps, std::size_t p_max);

/// Lower bound on mu(x_n, x_{n+p}, t) from iterating the triangle axiom:
/// the t-norm fold of mu(x_{n+i}, x_{n+i+1}, t / p) for i = 0..p-1.
/// `n` is a sequence index.
double chained_step_bound(const SequenceTrace& trace, const FuzzyMetric& fm, TNorm op, std::size_t n, std::size_t p,
                          double t);

}  // namespace fuzzyfp
