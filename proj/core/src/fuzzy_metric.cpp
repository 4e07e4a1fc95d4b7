#include "fuzzyfp/fuzzy_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

std::string_view to_string(FuzzyMetricForm f) noexcept {
  switch (f) {
    case FuzzyMetricForm::induced_standard: return "standard";
    case FuzzyMetricForm::induced_exponential: return "exponential";
    case FuzzyMetricForm::table: return "table";
  }
  return "?";
}

FuzzyMetric induced_standard(CarrierSpace carrier) {
  return FuzzyMetric(std::make_shared<const CarrierSpace>(std::move(carrier)), FuzzyMetricForm::induced_standard);
}

FuzzyMetric induced_exponential(CarrierSpace carrier) {
  return FuzzyMetric(std::make_shared<const CarrierSpace>(std::move(carrier)), FuzzyMetricForm::induced_exponential);
}

FuzzyMetric table_metric(CarrierSpace carrier, TGrid grid, std::vector<std::vector<std::vector<double>>> values) {
  if (carrier.kind() != CarrierKind::finite) throw DomainError("table fuzzy metric needs a finite carrier");
  const std::size_t n = carrier.size();
  if (values.size() != n) throw DomainError("table fuzzy metric: wrong number of rows");
  for (const auto& row : values) {
    if (row.size() != n) throw DomainError("table fuzzy metric: wrong number of columns");
    for (const auto& cell : row) {
      if (cell.size() != grid.size()) throw DomainError("table fuzzy metric: cell length differs from grid size");
      for (double v : cell) {
        if (!(v > 0.0 && v <= 1.0)) throw DomainError("table fuzzy metric values must lie in (0, 1]");
      }
    }
  }
  std::vector<double> log_t;
  log_t.reserve(grid.size());
  for (double t : grid) log_t.push_back(std::log(t));
  auto table = std::make_shared<const FuzzyMetric::Table>(
      FuzzyMetric::Table{std::move(grid), std::move(log_t), std::move(values)});
  return FuzzyMetric(std::make_shared<const CarrierSpace>(std::move(carrier)), FuzzyMetricForm::table,
                     std::move(table));
}

double FuzzyMetric::from_distance(double d, double t) const noexcept {
  // Floored at the smallest normal double so that mu > 0 survives underflow
  // (exp(-d/t) is exactly 0 in double precision once d/t exceeds ~745).
  constexpr double floor = std::numeric_limits<double>::min();
  const double v = form_ == FuzzyMetricForm::induced_exponential ? std::exp(-d / t) : t / (t + d);
  return std::max(v, floor);
}

double FuzzyMetric::table_value(std::size_t i, std::size_t j, double t) const noexcept {
  const auto& cell = table_->values[i][j];
  const auto& grid = table_->grid;
  if (t <= grid.front()) return cell.front();
  if (t >= grid.back()) return cell.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), t);
  const auto k = static_cast<std::size_t>(it - grid.begin());
  if (grid[k - 1] == t) return cell[k - 1];
  const double lt = std::log(t);
  const double w = (lt - table_->log_t[k - 1]) / (table_->log_t[k] - table_->log_t[k - 1]);
  return cell[k - 1] + w * (cell[k] - cell[k - 1]);
}

double FuzzyMetric::operator()(const Point& x, const Point& y, double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("fuzzy metric requires finite t > 0");
  carrier_->require(x, "x");
  carrier_->require(y, "y");
  if (form_ == FuzzyMetricForm::table) return table_value(x.index(), y.index(), t);
  return from_distance(carrier_->distance(x, y), t);
}

double eval_mu(const FuzzyMetric& fm, const Point& x, const Point& y, double t) { return fm(x, y, t); }

}  // namespace fuzzyfp
