#include "fuzzyfp/carrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

std::string_view to_string(CrispMetric m) noexcept {
  switch (m) {
    case CrispMetric::euclidean: return "euclidean";
    case CrispMetric::max: return "max";
    case CrispMetric::table: return "table";
  }
  return "?";
}

std::string_view to_string(CarrierKind k) noexcept {
  return k == CarrierKind::box ? "box" : "finite";
}

CarrierSpace CarrierSpace::box(std::vector<double> lo, std::vector<double> hi, CrispMetric metric) {
  if (lo.empty() || lo.size() != hi.size()) throw DomainError("box bounds must be non-empty and of equal length");
  if (metric == CrispMetric::table) throw DomainError("table metric requires a finite carrier");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (std::isnan(lo[i]) || std::isnan(hi[i]) || !(lo[i] < hi[i])) {
      throw DomainError("box bound lo < hi violated on coordinate " + std::to_string(i));
    }
  }
  CarrierSpace c;
  c.kind_ = CarrierKind::box;
  c.metric_ = metric;
  c.lo_ = std::move(lo);
  c.hi_ = std::move(hi);
  return c;
}

CarrierSpace CarrierSpace::unbounded(std::size_t dim, CrispMetric metric) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return box(std::vector<double>(dim, -inf), std::vector<double>(dim, inf), metric);
}

CarrierSpace CarrierSpace::finite(std::vector<std::vector<double>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("finite carrier must have at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw DomainError("distance table must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = table[i][j];
      if (!std::isfinite(d) || d < 0) throw DomainError("distance table entries must be finite and nonnegative");
      if (i == j && d != 0) throw DomainError("distance table diagonal must be zero");
      if (i != j && d == 0) throw DomainError("distinct elements must have positive distance");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != table[j][i]) throw DomainError("distance table must be symmetric");
      for (std::size_t k = 0; k < n; ++k) {
        if (table[i][k] > table[i][j] + table[j][k]) {
          throw DomainError("distance table violates the triangle inequality at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }
  CarrierSpace c;
  c.kind_ = CarrierKind::finite;
  c.metric_ = CrispMetric::table;
  c.table_ = std::move(table);
  return c;
}

std::size_t CarrierSpace::dim() const noexcept { return kind_ == CarrierKind::box ? lo_.size() : table_.size(); }

bool CarrierSpace::bounded() const noexcept {
  if (kind_ == CarrierKind::finite) return true;
  return std::all_of(lo_.begin(), lo_.end(), [](double v) { return std::isfinite(v); }) &&
         std::all_of(hi_.begin(), hi_.end(), [](double v) { return std::isfinite(v); });
}

bool CarrierSpace::contains(const Point& p) const noexcept {
  if (kind_ == CarrierKind::finite) return p.is_index() && p.index() < table_.size();
  if (p.is_index() || p.dim() != lo_.size()) return false;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

void CarrierSpace::require(const Point& p, std::string_view what) const {
  if (!contains(p)) throw DomainError(std::string(what) + " " + p.to_string() + " is not in the carrier");
}

double CarrierSpace::distance(const Point& a, const Point& b) const {
  if (kind_ == CarrierKind::finite) return table_.at(a.index()).at(b.index());
  if (a.dim() != lo_.size() || b.dim() != lo_.size()) throw DomainError("point dimension does not match carrier");
  double acc = 0.0;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    const double diff = std::abs(a[i] - b[i]);
    if (metric_ == CrispMetric::max) {
      acc = std::max(acc, diff);
    } else {
      acc += diff * diff;
    }
  }
  return metric_ == CrispMetric::max ? acc : std::sqrt(acc);
}

Point CarrierSpace::sample(Rng& rng, double sampling_radius) const {
  if (kind_ == CarrierKind::finite) return Point::at_index(rng.index(table_.size()));
  std::vector<double> coords(lo_.size());
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    const double lo = std::isfinite(lo_[i]) ? lo_[i] : std::min(-sampling_radius, hi_[i] - 2 * sampling_radius);
    const double hi = std::isfinite(hi_[i]) ? hi_[i] : std::max(sampling_radius, lo + 2 * sampling_radius);
    coords[i] = rng.uniform(lo, hi);
  }
  return Point(std::move(coords));
}

}  // namespace fuzzyfp
