#pragma once

#include <cstdint>
#include <random>

namespace fuzzyfp {

/// Deterministic 64-bit generator used for every sampled check.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Reals are derived as (u >> 11) * 2^-53 and indices as u % n,
/// so draws do not depend on the standard library's distribution classes
/// and reproduce bit-for-bit in any language with an MT19937-64.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";
  static constexpr const char* kRealRule = "(u >> 11) * 2^-53";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fuzzyfp
