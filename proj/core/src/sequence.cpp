#include "fuzzyfp/sequence.hpp"

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {
namespace {

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("eps must lie in (0, 1)");
}

}  // namespace

SequenceTrace make_trace(std::vector<Point> points, const FuzzyMetric& fm, const TGrid& grid,
                         std::size_t first_index) {
  SequenceTrace trace{first_index, {}, grid, {}};
  trace.points.reserve(points.size());
  for (auto& p : points) extend_trace(trace, std::move(p), fm);
  return trace;
}

void extend_trace(SequenceTrace& trace, Point next, const FuzzyMetric& fm) {
  if (!trace.points.empty()) {
    std::vector<double> row;
    row.reserve(trace.grid.size());
    for (double t : trace.grid) row.push_back(fm(trace.points.back(), next, t));
    trace.step_nearness.push_back(std::move(row));
  }
  trace.points.push_back(std::move(next));
}

bool is_convergent(const SequenceTrace& trace, const Point& limit, const FuzzyMetric& fm, const TGrid& grid,
                   double eps) {
  if (trace.empty()) throw UsageError("is_convergent: empty trace");
  require_eps(eps);
  for (double t : grid) {
    if (fm(trace.points.back(), limit, t) < 1.0 - eps) return false;
  }
  return true;
}

bool is_cauchy(const SequenceTrace& trace, const FuzzyMetric& fm, const TGrid& grid, double eps, std::size_t p_max) {
  if (p_max < 1) throw UsageError("is_cauchy: p_max must be at least 1");
  if (trace.size() < p_max + 1) throw UsageError("is_cauchy: trace shorter than p_max + 1");
  require_eps(eps);
  const std::size_t n = trace.size() - 1 - p_max;
  for (std::size_t p = 1; p <= p_max; ++p) {
    for (double t : grid) {
      if (fm(trace.points[n], trace.points[n + p], t) < 1.0 - eps) return false;
    }
  }
  return true;
}

double chained_step_bound(const SequenceTrace& trace, const FuzzyMetric& fm, TNorm op, std::size_t n, std::size_t p,
                          double t) {
  if (p < 1) throw UsageError("chained_step_bound: p must be at least 1");
  if (n < trace.first_index || n + p > trace.last_index()) throw UsageError("chained_step_bound: range outside trace");
  const double t1 = t / static_cast<double>(p);
  double acc = 1.0;
  for (std::size_t i = 0; i < p; ++i) acc = op(acc, fm(trace.at(n + i), trace.at(n + i + 1), t1));
  return acc;
}

}  // namespace fuzzyfp
