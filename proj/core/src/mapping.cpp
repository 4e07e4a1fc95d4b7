#include "fuzzyfp/mapping.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

std::string_view to_string(MappingForm f) noexcept {
  switch (f) {
    case MappingForm::affine: return "affine";
    case MappingForm::constant: return "constant";
    case MappingForm::table: return "table";
    case MappingForm::composed: return "composed";
  }
  return "?";
}

Mapping Mapping::affine(std::size_t rows, std::size_t cols, std::vector<double> matrix, std::vector<double> offset) {
  if (rows == 0 || cols == 0) throw DomainError("affine mapping needs a non-empty matrix");
  if (matrix.size() != rows * cols) throw DomainError("affine matrix size does not match rows x cols");
  if (offset.size() != rows) throw DomainError("affine offset length does not match rows");
  for (double v : matrix) {
    if (!std::isfinite(v)) throw DomainError("affine matrix entries must be finite");
  }
  for (double v : offset) {
    if (!std::isfinite(v)) throw DomainError("affine offset entries must be finite");
  }
  Mapping m;
  m.form_ = MappingForm::affine;
  m.rows_ = rows;
  m.cols_ = cols;
  m.matrix_ = std::move(matrix);
  m.offset_ = std::move(offset);
  return m;
}

Mapping Mapping::affine_1d(double slope, double intercept) { return affine(1, 1, {slope}, {intercept}); }

Mapping Mapping::identity(std::size_t dim) {
  std::vector<double> eye(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) eye[i * dim + i] = 1.0;
  return affine(dim, dim, std::move(eye), std::vector<double>(dim, 0.0));
}

Mapping Mapping::constant(Point value) {
  Mapping m;
  m.form_ = MappingForm::constant;
  m.constant_ = std::move(value);
  return m;
}

Mapping Mapping::table(std::vector<std::size_t> targets) {
  if (targets.empty()) throw DomainError("table mapping must be non-empty");
  Mapping m;
  m.form_ = MappingForm::table;
  m.targets_ = std::move(targets);
  return m;
}

Mapping Mapping::composed(std::vector<Mapping> parts) {
  if (parts.empty()) throw DomainError("composed mapping needs at least one part");
  Mapping m;
  m.form_ = MappingForm::composed;
  m.parts_ = std::move(parts);
  return m;
}

Point Mapping::operator()(const Point& x) const {
  switch (form_) {
    case MappingForm::constant:
      return constant_;
    case MappingForm::table:
      if (!x.is_index()) throw DomainError("table mapping: input is not an index");
      if (x.index() >= targets_.size()) throw DomainError("table mapping: index out of range");
      return Point::at_index(targets_[x.index()]);
    case MappingForm::affine: {
      if (x.is_index() || x.dim() != cols_) throw DomainError("affine mapping: input dimension mismatch");
      std::vector<double> out(offset_);
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out[r] += matrix_[r * cols_ + c] * x[c];
      }
      return Point(std::move(out));
    }
    case MappingForm::composed: {
      Point p = x;
      for (const auto& part : parts_) p = part(p);
      return p;
    }
  }
  throw DomainError("unknown mapping form");
}

std::optional<double> Mapping::lipschitz(CrispMetric metric) const {
  switch (form_) {
    case MappingForm::constant:
      return 0.0;
    case MappingForm::table:
      return std::nullopt;
    case MappingForm::affine:
      return operator_norm(rows_, cols_, matrix_, metric);
    case MappingForm::composed: {
      double l = 1.0;
      for (const auto& part : parts_) {
        const auto pl = part.lipschitz(metric);
        if (!pl) return std::nullopt;
        l *= *pl;
      }
      return l;
    }
  }
  return std::nullopt;
}

double operator_norm(std::size_t rows, std::size_t cols, const std::vector<double>& matrix, CrispMetric metric) {
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      matrix.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  if (metric == CrispMetric::max) return m.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

Point image(const Mapping& f, const Point& x, const CarrierSpace& codomain) {
  Point y = f(x);
  if (!codomain.contains(y)) {
    throw CodomainError("mapping image " + y.to_string() + " of " + x.to_string() + " is outside its codomain");
  }
  return y;
}

}  // namespace fuzzyfp
