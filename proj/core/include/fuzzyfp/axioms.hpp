#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fuzzyfp/fuzzy_metric.hpp"
#include "fuzzyfp/tgrid.hpp"
#include "fuzzyfp/tnorm.hpp"

namespace fuzzyfp {

struct AxiomViolation {
  std::string axiom;          ///< "commutativity", ..., or "i".."v" for fuzzy metrics
  std::vector<double> values; ///< scalar witness: (a, b, c, d) or (s, t)
  std::vector<Point> points;  ///< point witness for fuzzy-metric axioms
  double magnitude = 0.0;     ///< size of the failure (difference or excess)
};

struct AxiomReport {
  static constexpr std::size_t kMaxStoredPerAxiom = 64;

  std::string subject;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
  std::vector<double> grid;            ///< empty for t-norm checks
  std::map<std::string, std::size_t> counts;
  std::vector<AxiomViolation> violations;  ///< first kMaxStoredPerAxiom per axiom
  std::vector<std::string> notes;

  [[nodiscard]] std::size_t total() const noexcept;
  [[nodiscard]] bool ok() const noexcept { return total() == 0; }
  void record(AxiomViolation v);
};

using BinaryOp = std::function<double(double, double)>;

/// Samples (a, b, c, d) in [0,1]^4 and checks: range, commutativity (bitwise),
/// associativity (within kAssociativityTol), monotonicity, and a * 1 == a
/// (exact). The first two tuples are the corners (0,0,0,0) and (1,1,1,1).
AxiomReport check_tnorm_axioms(const BinaryOp& op, std::size_t sample_count, std::uint64_t seed,
                               std::string subject = "custom");
AxiomReport check_tnorm_axioms(TNorm op, std::size_t sample_count, std::uint64_t seed);

inline constexpr double kAssociativityTol = 1e-12;
/// Slack on the triangle axiom (iv) for rounding in mu and the t-norm.
inline constexpr double kTriangleTol = 1e-12;

struct FuzzyAxiomOptions {
  double point_tol = kPointTolerance;
  double sampling_radius = CarrierSpace::kDefaultSamplingRadius;
};

/// Samples `triple_count` triples (x, y, z) from the carrier and checks axioms
/// (i)-(iv) of a fuzzy metric space exactly on every grid pair (s, t), and
/// axiom (v) as monotonicity over the grid for induced forms (table-based
/// metrics: (v) is reported unchecked in notes).
AxiomReport check_fm_axioms(const FuzzyMetric& fm, TNorm op, std::size_t triple_count, const TGrid& grid,
                            std::uint64_t seed, FuzzyAxiomOptions options = {});

}  // namespace fuzzyfp
