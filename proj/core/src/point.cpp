#include "fuzzyfp/point.hpp"

#include <cmath>
#include <cstdio>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw DomainError("point coordinate is not finite");
  }
}

Point Point::at_index(std::size_t index) {
  Point p;
  p.index_ = index;
  return p;
}

std::size_t Point::index() const {
  if (!index_) throw UsageError("point is not an index into a finite carrier");
  return *index_;
}

std::string Point::to_string() const {
  if (index_) return "#" + std::to_string(*index_);
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", coords_[i]);
    if (i) out += ", ";
    out += buf;
  }
  return out + ")";
}

}  // namespace fuzzyfp
