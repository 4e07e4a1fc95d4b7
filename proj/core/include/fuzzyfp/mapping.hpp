#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzyfp/carrier.hpp"
#include "fuzzyfp/point.hpp"

namespace fuzzyfp {

enum class MappingForm { affine, constant, table, composed };

std::string_view to_string(MappingForm f) noexcept;

/// A mapping between carrier spaces in one of a few declared forms.
///
///   affine    x -> M x + b     (box carriers; M is rows x cols, row-major)
///   constant  x -> c
///   table     i -> table[i]    (finite carriers)
///   composed  x -> f_k(...f_1(x))   (parts applied first to last)
class Mapping {
 public:
  static Mapping affine(std::size_t rows, std::size_t cols, std::vector<double> matrix, std::vector<double> offset);
  /// One-dimensional x -> slope * x + intercept.
  static Mapping affine_1d(double slope, double intercept);
  static Mapping identity(std::size_t dim);
  static Mapping constant(Point value);
  static Mapping table(std::vector<std::size_t> targets);
  static Mapping composed(std::vector<Mapping> parts);

  [[nodiscard]] MappingForm form() const noexcept { return form_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const std::vector<double>& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const std::vector<double>& offset() const noexcept { return offset_; }
  [[nodiscard]] const Point& constant_value() const noexcept { return constant_; }
  [[nodiscard]] const std::vector<std::size_t>& targets() const noexcept { return targets_; }
  [[nodiscard]] const std::vector<Mapping>& parts() const noexcept { return parts_; }

  /// Evaluates without a codomain check. Throws DomainError on a shape
  /// mismatch or a non-finite result.
  [[nodiscard]] Point operator()(const Point& x) const;

  /// Lipschitz constant with respect to `metric` on both sides, when the form
  /// declares one (affine: operator norm, constant: 0, composed: product).
  /// Table mappings declare none.
  [[nodiscard]] std::optional<double> lipschitz(CrispMetric metric) const;

 private:
  MappingForm form_ = MappingForm::constant;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> matrix_, offset_;
  Point constant_;
  std::vector<std::size_t> targets_;
  std::vector<Mapping> parts_;
};

/// f(x) with the codomain containment check; throws CodomainError.
Point image(const Mapping& f, const Point& x, const CarrierSpace& codomain);

/// Operator norm of a row-major matrix: spectral norm for euclidean,
/// maximum absolute row sum for max.
double operator_norm(std::size_t rows, std::size_t cols, const std::vector<double>& matrix, CrispMetric metric);

/// T: X -> Y and S: Y -> X.
struct MapPair {
  Mapping T;
  Mapping S;
};

/// A, B: X -> Y and S, T: Y -> X. With X = Y this is a self-quadruple.
struct MapQuadruple {
  Mapping A;
  Mapping B;
  Mapping S;
  Mapping T;
};

}  // namespace fuzzyfp
