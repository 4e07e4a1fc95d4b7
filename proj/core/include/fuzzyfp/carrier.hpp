#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyfp/point.hpp"
#include "fuzzyfp/rng.hpp"

namespace fuzzyfp {

enum class CarrierKind { box, finite };
enum class CrispMetric { euclidean, max, table };

std::string_view to_string(CrispMetric m) noexcept;
std::string_view to_string(CarrierKind k) noexcept;

/// Default tolerance for point equality: x = y iff d(x, y) <= kPointTolerance.
inline constexpr double kPointTolerance = 1e-9;

/// The underlying set of a fuzzy metric space: a closed box in R^n or a
/// finite set with a tabulated crisp metric. Completeness is assumed.
///
/// Box bounds may be infinite (an unbounded coordinate); sampling then draws
/// from [-sampling_radius, sampling_radius] on that coordinate.
class CarrierSpace {
 public:
  static constexpr double kDefaultSamplingRadius = 10.0;

  /// Throws DomainError unless lo[i] < hi[i] for every coordinate.
  static CarrierSpace box(std::vector<double> lo, std::vector<double> hi,
                          CrispMetric metric = CrispMetric::euclidean);
  /// All of R^n.
  static CarrierSpace unbounded(std::size_t dim, CrispMetric metric = CrispMetric::euclidean);
  /// Finite set with crisp distance table. The table must be square,
  /// symmetric, zero exactly on the diagonal, positive off it, and satisfy
  /// the triangle inequality; violations throw DomainError.
  static CarrierSpace finite(std::vector<std::vector<double>> table);

  [[nodiscard]] CarrierKind kind() const noexcept { return kind_; }
  [[nodiscard]] CrispMetric metric() const noexcept { return metric_; }
  /// Dimension for boxes, number of elements for finite sets.
  [[nodiscard]] std::size_t dim() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] const std::vector<double>& lower() const noexcept { return lo_; }
  [[nodiscard]] const std::vector<double>& upper() const noexcept { return hi_; }
  [[nodiscard]] const std::vector<std::vector<double>>& table() const noexcept { return table_; }
  [[nodiscard]] bool bounded() const noexcept;

  [[nodiscard]] bool contains(const Point& p) const noexcept;
  /// Throws DomainError when p is not an element of this carrier.
  void require(const Point& p, std::string_view what = "point") const;

  /// Crisp distance. Both points must belong to this carrier.
  [[nodiscard]] double distance(const Point& a, const Point& b) const;
  [[nodiscard]] bool equal(const Point& a, const Point& b, double tol = kPointTolerance) const {
    return distance(a, b) <= tol;
  }

  [[nodiscard]] Point sample(Rng& rng, double sampling_radius = kDefaultSamplingRadius) const;

 private:
  CarrierKind kind_ = CarrierKind::box;
  CrispMetric metric_ = CrispMetric::euclidean;
  std::vector<double> lo_, hi_;
  std::vector<std::vector<double>> table_;
};

}  // namespace fuzzyfp
