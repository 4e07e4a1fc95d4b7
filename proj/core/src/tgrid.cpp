#include "fuzzyfp/tgrid.hpp"

#include <cmath>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

TGrid::TGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("t-grid must be non-empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0) throw DomainError("t-grid values must be positive and finite");
    if (i > 0 && !(values_[i] > values_[i - 1])) throw DomainError("t-grid values must be strictly increasing");
  }
}

TGrid TGrid::log_spaced(double lo, double hi, std::size_t points) {
  if (points == 0) throw DomainError("t-grid needs at least one point");
  if (!(lo > 0) || !(hi >= lo) || !std::isfinite(hi)) throw DomainError("t-grid bounds must satisfy 0 < lo <= hi");
  if (points == 1) return TGrid({lo});
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  std::vector<double> v(points);
  for (std::size_t i = 0; i < points; ++i) {
    v[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  v.front() = lo;
  v.back() = hi;
  return TGrid(std::move(v));
}

TGrid TGrid::standard() { return log_spaced(kDefaultLo, kDefaultHi, kDefaultPoints); }

TGrid TGrid::extended_to(double t_max) const {
  if (!(t_max > 0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive and finite");
  std::vector<double> v;
  if (t_max < back()) {
    for (double t : values_) {
      if (t <= t_max) v.push_back(t);
    }
    if (v.empty()) v.push_back(t_max);
    return TGrid(std::move(v));
  }
  v = values_;
  const double step = values_.size() > 1 ? std::log10(back()) - std::log10(values_[values_.size() - 2]) : 1.0;
  const double base = std::log10(back());
  const double target = std::log10(t_max);
  for (int k = 1;; ++k) {
    const double e = base + step * k;
    if (e > target + 1e-9 * std::max(1.0, std::abs(target))) break;
    v.push_back(std::pow(10.0, e));
  }
  if (v.size() > values_.size() && std::abs(v.back() - t_max) <= 1e-9 * t_max) {
    v.back() = t_max;
  } else if (v.back() < t_max) {
    v.push_back(t_max);
  }
  return TGrid(std::move(v));
}

}  // namespace fuzzyfp
