#include "fuzzyfp/tnorm.hpp"

#include <algorithm>
#include <string>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

std::string_view to_string(TNormKind k) noexcept {
  switch (k) {
    case TNormKind::minimum: return "minimum";
    case TNormKind::product: return "product";
    case TNormKind::lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

TNormKind parse_tnorm(std::string_view name) {
  if (name == "minimum" || name == "min") return TNormKind::minimum;
  if (name == "product" || name == "prod") return TNormKind::product;
  if (name == "lukasiewicz") return TNormKind::lukasiewicz;
  throw DomainError("unknown t-norm '" + std::string(name) + "'");
}

double TNorm::apply_unchecked(double a, double b) const noexcept {
  switch (kind_) {
    case TNormKind::minimum:
      return std::min(a, b);
    case TNormKind::product:
      return a * b;
    case TNormKind::lukasiewicz: {
      // lo - (1 - hi) is a single rounding of lo + hi - 1 whenever the result
      // is positive (1 - hi is exact for hi >= 1/2), which keeps the operator
      // exactly commutative, monotone, and a * 1 == a.
      const auto [lo, hi] = std::minmax(a, b);
      return std::max(lo - (1.0 - hi), 0.0);
    }
  }
  return 0.0;
}

double TNorm::operator()(double a, double b) const {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw DomainError("t-norm arguments must lie in [0,1]");
  }
  return apply_unchecked(a, b);
}

double tnorm_apply(TNorm op, double a, double b) { return op(a, b); }

}  // namespace fuzzyfp
