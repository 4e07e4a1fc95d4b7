#include "fuzzyfp/solver.hpp"

#include <algorithm>
#include <functional>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iter: return "max-iter";
    case SolveStatus::diverging: return "diverging";
  }
  return "?";
}

void SolveConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("solve.eps must lie in (0, 1)");
  if (max_iter < 1) throw ConfigError("solve.max_iter must be at least 1");
  if (stall_window < 2) throw ConfigError("solve.stall_window must be at least 2");
  if (p_max < 1) throw ConfigError("solve.p_max must be at least 1");
  if (!(verify_tol > 0.0 && verify_tol < 1.0)) throw ConfigError("solve.verify_tol must lie in (0, 1)");
  if (!(point_tol >= 0.0)) throw ConfigError("solve.point_tol must be nonnegative");
  if (!(uniqueness_tol >= 0.0)) throw ConfigError("solve.uniqueness_tol must be nonnegative");
}

double ConclusionReport::min_residual() const noexcept {
  double m = 1.0;
  for (const auto& r : residuals) m = std::min(m, r.value);
  return m;
}

namespace {

/// One step of a scheme: given n and x_{n-1}, produce (y_n, x_n).
using StepFn = std::function<std::pair<Point, Point>(std::size_t n, const Point& prev_x)>;

bool tail_near(const SequenceTrace& trace, const FuzzyMetric& fm, const TGrid& grid, double floor, std::size_t p) {
  const std::size_t start = trace.size() - 1 - p;
  for (std::size_t q = 1; q <= p; ++q) {
    for (double t : grid) {
      if (fm(trace.points[start], trace.points[start + q], t) < floor) return false;
    }
  }
  return true;
}

bool row_near(const std::vector<double>& row, double floor) {
  return std::all_of(row.begin(), row.end(), [floor](double v) { return v >= floor; });
}

FixedPointResult run_scheme(const StepFn& step, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x0,
                            const SolveConfig& cfg) {
  cfg.validate();
  mu.carrier().require(x0, "x0");

  FixedPointResult result;
  result.trace_x = make_trace({x0}, mu, cfg.grid, 0);
  result.trace_y = make_trace({}, nu, cfg.grid, 1);

  result.status = SolveStatus::max_iter;
  result.reason = "iteration cap reached";
  const double floor = 1.0 - cfg.eps;
  double prev_small = 0.0;
  std::size_t decreasing = 0;

  for (std::size_t n = 1; n <= cfg.max_iter; ++n) {
    try {
      auto [y, x] = step(n, result.trace_x.points.back());
      extend_trace(result.trace_y, std::move(y), nu);
      extend_trace(result.trace_x, std::move(x), mu);
    } catch (const DomainError& e) {
      result.status = SolveStatus::diverging;
      result.reason = std::string("iterate left its carrier: ") + e.what();
      result.iterations = n - 1;
      break;
    }
    result.iterations = n;
    if (n < 2) continue;

    const auto& xrow = result.trace_x.step_nearness.back();
    const auto& yrow = result.trace_y.step_nearness.back();
    if (row_near(xrow, floor) && row_near(yrow, floor)) {
      const std::size_t p = std::min(cfg.p_max, n - 1);
      if (tail_near(result.trace_x, mu, cfg.grid, floor, p) && tail_near(result.trace_y, nu, cfg.grid, floor, p)) {
        result.status = SolveStatus::converged;
        result.reason = "step and tail nearness >= 1 - eps on the grid";
        break;
      }
    }

    const double small = std::min(xrow.front(), yrow.front());
    decreasing = (n > 2 && small < prev_small) ? decreasing + 1 : 0;
    prev_small = small;
    if (decreasing >= cfg.stall_window) {
      result.status = SolveStatus::diverging;
      result.reason = "step nearness at the smallest t decreased strictly for " + std::to_string(cfg.stall_window) +
                      " consecutive steps";
      break;
    }
  }
  result.z = result.trace_x.points.back();
  if (!result.trace_y.empty()) result.w = result.trace_y.points.back();
  return result;
}

Residual residual(std::string name, const FuzzyMetric& fm, const std::function<Point()>& lhs, const Point& rhs,
                  const TGrid& grid) {
  try {
    const Point a = lhs();
    double m = 1.0;
    for (double t : grid) m = std::min(m, fm(a, rhs, t));
    return {std::move(name), m};
  } catch (const DomainError&) {
    return {std::move(name), 0.0};
  }
}

ConclusionReport finish(std::vector<Residual> residuals, double tol) {
  ConclusionReport report{std::move(residuals), tol, true};
  for (const auto& r : report.residuals) report.pass = report.pass && r.value >= 1.0 - tol;
  return report;
}

}  // namespace

ConclusionReport verify_conclusions_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                         const Point& z, const Point& w, const TGrid& grid, double tol) {
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  return finish(
      {
          residual("STz=z", mu, [&] { return image(pair.S, image(pair.T, z, Y), X); }, z, grid),
          residual("TSw=w", nu, [&] { return image(pair.T, image(pair.S, w, X), Y); }, w, grid),
          residual("Tz=w", nu, [&] { return image(pair.T, z, Y); }, w, grid),
          residual("Sw=z", mu, [&] { return image(pair.S, w, X); }, z, grid),
      },
      tol);
}

ConclusionReport verify_conclusions_quadruple(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                              const Point& z, const Point& w, const TGrid& grid, double tol) {
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  return finish(
      {
          residual("SAz=z", mu, [&] { return image(quad.S, image(quad.A, z, Y), X); }, z, grid),
          residual("TBz=z", mu, [&] { return image(quad.T, image(quad.B, z, Y), X); }, z, grid),
          residual("BSw=w", nu, [&] { return image(quad.B, image(quad.S, w, X), Y); }, w, grid),
          residual("ATw=w", nu, [&] { return image(quad.A, image(quad.T, w, X), Y); }, w, grid),
          residual("Az=w", nu, [&] { return image(quad.A, z, Y); }, w, grid),
          residual("Bz=w", nu, [&] { return image(quad.B, z, Y); }, w, grid),
          residual("Sw=z", mu, [&] { return image(quad.S, w, X); }, z, grid),
          residual("Tw=z", mu, [&] { return image(quad.T, w, X); }, z, grid),
      },
      tol);
}

FixedPointResult iterate_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x0,
                              const SolveConfig& cfg) {
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  FixedPointResult result = run_scheme(
      [&](std::size_t, const Point& prev) {
        Point y = image(pair.T, prev, Y);
        Point x = image(pair.S, y, X);
        return std::pair{std::move(y), std::move(x)};
      },
      mu, nu, x0, cfg);
  // w is T(z) rather than the raw last y_n: w = lim T x_n = T z.
  try {
    result.w = image(pair.T, result.z, Y);
  } catch (const DomainError&) {
  }
  result.conclusions = verify_conclusions_pair(pair, mu, nu, result.z, result.w, cfg.grid, cfg.verify_tol);
  return result;
}

FixedPointResult iterate_quadruple(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                   const Point& x0, const SolveConfig& cfg) {
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  FixedPointResult result = run_scheme(
      [&](std::size_t n, const Point& prev) {
        const bool odd = n % 2 == 1;
        Point y = image(odd ? quad.A : quad.B, prev, Y);
        Point x = image(odd ? quad.S : quad.T, y, X);
        return std::pair{std::move(y), std::move(x)};
      },
      mu, nu, x0, cfg);
  if (result.trace_y.empty()) {
    result.conclusions = finish({}, cfg.verify_tol);
    result.conclusions.pass = false;
    return result;
  }
  result.conclusions = verify_conclusions_quadruple(quad, mu, nu, result.z, result.w, cfg.grid, cfg.verify_tol);
  return result;
}

FixedPointResult solve(const Problem& problem, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x0,
                       const SolveConfig& cfg) {
  return std::visit(
      [&](const auto& maps) {
        if constexpr (std::is_same_v<std::decay_t<decltype(maps)>, MapPair>) {
          return iterate_pair(maps, mu, nu, x0, cfg);
        } else {
          return iterate_quadruple(maps, mu, nu, x0, cfg);
        }
      },
      problem);
}

UniquenessReport uniqueness_probe(const Problem& problem, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                  const std::vector<Point>& starts, const SolveConfig& cfg) {
  if (starts.size() < 2) throw UsageError("uniqueness_probe needs at least two starting points");
  UniquenessReport report;
  report.tol = cfg.uniqueness_tol;
  report.conclusive = true;
  for (const auto& start : starts) {
    FixedPointResult r = solve(problem, mu, nu, start, cfg);
    report.conclusive = report.conclusive && r.status == SolveStatus::converged;
    report.status.push_back(r.status);
    report.z.push_back(std::move(r.z));
    report.w.push_back(std::move(r.w));
  }
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (std::size_t j = i + 1; j < starts.size(); ++j) {
      if (mu.carrier().contains(report.z[i]) && mu.carrier().contains(report.z[j])) {
        report.max_distance_z = std::max(report.max_distance_z, mu.carrier().distance(report.z[i], report.z[j]));
      }
      if (nu.carrier().contains(report.w[i]) && nu.carrier().contains(report.w[j])) {
        report.max_distance_w = std::max(report.max_distance_w, nu.carrier().distance(report.w[i], report.w[j]));
      }
    }
  }
  report.unique = report.conclusive && report.max_distance_z <= report.tol && report.max_distance_w <= report.tol;
  return report;
}

}  // namespace fuzzyfp
