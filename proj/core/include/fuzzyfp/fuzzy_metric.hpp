#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "fuzzyfp/carrier.hpp"
#include "fuzzyfp/point.hpp"
#include "fuzzyfp/tgrid.hpp"

namespace fuzzyfp {

enum class FuzzyMetricForm { induced_standard, induced_exponential, table };

std::string_view to_string(FuzzyMetricForm f) noexcept;

/// Degree of nearness mu(x, y, t) in (0, 1] over a carrier space.
///
/// Induced forms are built from the carrier's crisp metric d:
///   standard     mu = t / (t + d)
///   exponential  mu = exp(-d / t)
/// Table form stores mu per (pair, grid t) on a finite carrier and
/// interpolates linearly in log t between grid points; outside the grid the
/// endpoint value is used.
///
/// Values are immutable after construction and cheap to copy.
class FuzzyMetric {
 public:
  [[nodiscard]] const CarrierSpace& carrier() const noexcept { return *carrier_; }
  [[nodiscard]] FuzzyMetricForm form() const noexcept { return form_; }
  [[nodiscard]] bool induced() const noexcept { return form_ != FuzzyMetricForm::table; }
  /// Grid of a table-based metric; empty optional for induced forms.
  [[nodiscard]] const TGrid* table_grid() const noexcept { return table_ ? &table_->grid : nullptr; }
  /// Per-(i, j) values over table_grid(); values[i][j][k].
  [[nodiscard]] const std::vector<std::vector<std::vector<double>>>* table_values() const noexcept {
    return table_ ? &table_->values : nullptr;
  }

  /// Nearness with argument checks: t > 0 and both points in the carrier.
  [[nodiscard]] double operator()(const Point& x, const Point& y, double t) const;

  /// Nearness from a precomputed crisp distance (induced forms only).
  [[nodiscard]] double from_distance(double d, double t) const noexcept;

  friend FuzzyMetric induced_standard(CarrierSpace carrier);
  friend FuzzyMetric induced_exponential(CarrierSpace carrier);
  friend FuzzyMetric table_metric(CarrierSpace carrier, TGrid grid,
                                  std::vector<std::vector<std::vector<double>>> values);

 private:
  struct Table {
    TGrid grid;
    std::vector<double> log_t;
    std::vector<std::vector<std::vector<double>>> values;
  };

  FuzzyMetric(std::shared_ptr<const CarrierSpace> carrier, FuzzyMetricForm form,
              std::shared_ptr<const Table> table = nullptr)
      : carrier_(std::move(carrier)), form_(form), table_(std::move(table)) {}

  [[nodiscard]] double table_value(std::size_t i, std::size_t j, double t) const noexcept;

  std::shared_ptr<const CarrierSpace> carrier_;
  FuzzyMetricForm form_;
  std::shared_ptr<const Table> table_;
};

FuzzyMetric induced_standard(CarrierSpace carrier);
FuzzyMetric induced_exponential(CarrierSpace carrier);
/// `carrier` must be finite with n elements; values is n x n x grid.size(),
/// every entry in (0, 1]. Symmetry and the remaining axioms are left to
/// check_fm_axioms so that deliberately broken tables can be built.
FuzzyMetric table_metric(CarrierSpace carrier, TGrid grid, std::vector<std::vector<std::vector<double>>> values);

/// mu(x, y, t); throws DomainError for t <= 0 or points outside the carrier.
double eval_mu(const FuzzyMetric& fm, const Point& x, const Point& y, double t);

}  // namespace fuzzyfp
