#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzyfp {

/// An element of a carrier space: either a coordinate vector (boxes in R^n)
/// or an index into a finite carrier.
class Point {
 public:
  Point() = default;

  /// Throws DomainError if any coordinate is NaN or infinite.
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

  static Point at_index(std::size_t index);

  [[nodiscard]] bool is_index() const noexcept { return index_.has_value(); }
  [[nodiscard]] std::size_t index() const;
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
  std::optional<std::size_t> index_;
};

}  // namespace fuzzyfp
