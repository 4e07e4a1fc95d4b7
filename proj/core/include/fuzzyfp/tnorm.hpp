#pragma once

#include <string_view>

namespace fuzzyfp {

enum class TNormKind { minimum, product, lukasiewicz };

std::string_view to_string(TNormKind k) noexcept;
/// Throws DomainError for unknown names.
TNormKind parse_tnorm(std::string_view name);

/// Continuous t-norm on [0,1].
class TNorm {
 public:
  constexpr explicit TNorm(TNormKind kind = TNormKind::product) noexcept : kind_(kind) {}

  [[nodiscard]] constexpr TNormKind kind() const noexcept { return kind_; }

  /// Throws DomainError unless a, b are in [0,1].
  [[nodiscard]] double operator()(double a, double b) const;

  /// Same as operator() without the range check.
  [[nodiscard]] double apply_unchecked(double a, double b) const noexcept;

 private:
  TNormKind kind_;
};

/// Free-function form of TNorm::operator().
double tnorm_apply(TNorm op, double a, double b);

}  // namespace fuzzyfp
