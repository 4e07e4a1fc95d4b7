#include "fuzzyfp/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/rng.hpp"

namespace fuzzyfp {

std::size_t AxiomReport::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

void AxiomReport::record(AxiomViolation v) {
  auto& n = counts[v.axiom];
  if (n++ < kMaxStoredPerAxiom) violations.push_back(std::move(v));
}

AxiomReport check_tnorm_axioms(const BinaryOp& op, std::size_t sample_count, std::uint64_t seed,
                               std::string subject) {
  if (sample_count < 1) throw UsageError("check_tnorm_axioms: sample_count must be at least 1");
  AxiomReport report;
  report.subject = std::move(subject);
  report.seed = seed;
  report.sample_count = sample_count;

  Rng rng(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    double a, b, c, d;
    if (i == 0) {
      a = b = c = d = 0.0;
    } else if (i == 1) {
      a = b = c = d = 1.0;
    } else {
      a = rng.uniform01();
      b = rng.uniform01();
      c = rng.uniform01();
      d = rng.uniform01();
    }
    const std::vector<double> w{a, b, c, d};

    const double ab = op(a, b);
    if (!(ab >= 0.0 && ab <= 1.0)) {
      report.record({"range", w, {}, ab < 0.0 ? -ab : ab - 1.0});
    }
    const double ba = op(b, a);
    if (ab != ba) report.record({"commutativity", w, {}, std::abs(ab - ba)});

    const double left = op(ab, c);
    const double right = op(a, op(b, c));
    if (std::abs(left - right) > kAssociativityTol) {
      report.record({"associativity", w, {}, std::abs(left - right)});
    }

    const auto [lo1, hi1] = std::minmax(a, c);
    const auto [lo2, hi2] = std::minmax(b, d);
    const double small = op(lo1, lo2);
    const double large = op(hi1, hi2);
    if (small > large) report.record({"monotonicity", {lo1, lo2, hi1, hi2}, {}, small - large});

    const double unit = op(a, 1.0);
    if (unit != a) report.record({"unit", {a, 1.0}, {}, std::abs(unit - a)});
  }
  return report;
}

AxiomReport check_tnorm_axioms(TNorm op, std::size_t sample_count, std::uint64_t seed) {
  return check_tnorm_axioms([op](double a, double b) { return op.apply_unchecked(a, b); }, sample_count, seed,
                            std::string(to_string(op.kind())));
}

AxiomReport check_fm_axioms(const FuzzyMetric& fm, TNorm op, std::size_t triple_count, const TGrid& grid,
                            std::uint64_t seed, FuzzyAxiomOptions options) {
  if (triple_count < 1) throw UsageError("check_fm_axioms: triple_count must be at least 1");
  AxiomReport report;
  report.subject = std::string(to_string(fm.form())) + " / " + std::string(to_string(op.kind()));
  report.seed = seed;
  report.sample_count = triple_count;
  report.grid.assign(grid.begin(), grid.end());
  if (!fm.induced()) report.notes.emplace_back("axiom (v) unchecked: continuity in t is not sampled for table-based metrics");

  const CarrierSpace& carrier = fm.carrier();
  const std::size_t nt = grid.size();
  Rng rng(seed);

  // mu over the grid for one ordered pair.
  auto row = [&](const Point& a, const Point& b) {
    std::vector<double> r(nt);
    for (std::size_t k = 0; k < nt; ++k) r[k] = fm(a, b, grid[k]);
    return r;
  };

  for (std::size_t i = 0; i < triple_count; ++i) {
    const Point x = carrier.sample(rng, options.sampling_radius);
    const Point y = carrier.sample(rng, options.sampling_radius);
    const Point z = carrier.sample(rng, options.sampling_radius);

    for (const Point* p : {&x, &y, &z}) {
      for (std::size_t k = 0; k < nt; ++k) {
        const double self = fm(*p, *p, grid[k]);
        if (self != 1.0) report.record({"ii", {grid[k]}, {*p, *p}, std::abs(1.0 - self)});
      }
    }

    const std::pair<const Point*, const Point*> pairs[] = {{&x, &y}, {&y, &z}, {&x, &z}};
    std::vector<double> rows[3];
    for (int q = 0; q < 3; ++q) {
      const Point& a = *pairs[q].first;
      const Point& b = *pairs[q].second;
      rows[q] = row(a, b);
      const auto back = row(b, a);
      const double d = carrier.distance(a, b);
      for (std::size_t k = 0; k < nt; ++k) {
        const double v = rows[q][k];
        if (!(v > 0.0 && v <= 1.0)) report.record({"i", {grid[k]}, {a, b}, v <= 0.0 ? -v : v - 1.0});
        if (v == 1.0 && d > options.point_tol) report.record({"ii", {grid[k]}, {a, b}, d});
        if (v != back[k]) report.record({"iii", {grid[k]}, {a, b}, std::abs(v - back[k])});
        if (fm.induced() && k + 1 < nt && rows[q][k + 1] < v) {
          report.record({"v", {grid[k], grid[k + 1]}, {a, b}, v - rows[q][k + 1]});
        }
      }
    }

    for (std::size_t ks = 0; ks < nt; ++ks) {
      for (std::size_t kt = 0; kt < nt; ++kt) {
        const double s = grid[ks];
        const double t = grid[kt];
        const double lhs = op.apply_unchecked(rows[0][ks], rows[1][kt]);
        const double rhs = fm(x, z, s + t);
        if (lhs > rhs + kTriangleTol) report.record({"iv", {s, t}, {x, y, z}, lhs - rhs});
      }
    }
  }
  return report;
}

}  // namespace fuzzyfp
