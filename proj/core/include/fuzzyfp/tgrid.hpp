#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyfp {

/// Finite, strictly increasing sample of the scale axis t > 0. Stands in for
/// the quantifier "for all t > 0" in every check.
class TGrid {
 public:
  static constexpr double kDefaultLo = 1e-2;
  static constexpr double kDefaultHi = 1e2;
  static constexpr std::size_t kDefaultPoints = 17;

  /// Throws DomainError unless values are non-empty, positive, finite and
  /// strictly increasing.
  explicit TGrid(std::vector<double> values);

  /// `points` log-spaced values from lo to hi inclusive (points == 1 gives {lo}).
  static TGrid log_spaced(double lo, double hi, std::size_t points);
  /// 17 log-spaced points on [1e-2, 1e2].
  static TGrid standard();

  /// Continues the grid's final log spacing up to t_max (inclusive, within
  /// rounding); the existing values are kept, so the result is a superset.
  /// A t_max below the last value truncates instead. Single-point grids
  /// extend by decades.
  [[nodiscard]] TGrid extended_to(double t_max) const;

  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double front() const noexcept { return values_.front(); }
  [[nodiscard]] double back() const noexcept { return values_.back(); }

  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  friend bool operator==(const TGrid&, const TGrid&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace fuzzyfp
