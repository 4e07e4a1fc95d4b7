#pragma once

#include <cmath>
#include <vector>

#include "fuzzyfp/carrier.hpp"
#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/mapping.hpp"

namespace testing {

inline fuzzyfp::CarrierSpace line() { return fuzzyfp::CarrierSpace::unbounded(1); }
inline fuzzyfp::FuzzyMetric line_mu() { return fuzzyfp::induced_standard(line()); }

inline fuzzyfp::MapPair linear_pair() {
  return {fuzzyfp::Mapping::affine_1d(0.5, 1.0), fuzzyfp::Mapping::affine_1d(1.0 / 3.0, 1.0)};
}

// Hand-written standard nearness on the real line.
inline double nearness(double a, double b, double t) { return t / (t + std::abs(a - b)); }

inline double min4(double a, double b, double c, double d) { return std::min(std::min(a, b), std::min(c, d)); }

inline std::vector<fuzzyfp::Point> points(std::initializer_list<double> xs) {
  std::vector<fuzzyfp::Point> out;
  for (double x : xs) out.push_back(fuzzyfp::Point{x});
  return out;
}

}  // namespace testing
