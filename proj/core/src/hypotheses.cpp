#include "fuzzyfp/hypotheses.hpp"

#include <algorithm>

#include "fuzzyfp/errors.hpp"

namespace fuzzyfp {

void HypothesisReport::skip(const std::string& reason, std::size_t n) {
  skipped += n;
  skip_reasons[reason] += n;
}

namespace {

double min4(double a, double b, double c, double d) { return std::min(std::min(a, b), std::min(c, d)); }

HypothesisReport blank_report(std::string name, const SampleSet& samples) {
  HypothesisReport r;
  r.inequality = std::move(name);
  r.grid.assign(samples.grid.begin(), samples.grid.end());
  r.sample_x = samples.points_x.size();
  r.sample_y = samples.points_y.size();
  r.exclude_diagonal = samples.exclude_diagonal;
  return r;
}

void require_points(const std::vector<Point>& points, const CarrierSpace& carrier, const char* what) {
  for (const auto& p : points) carrier.require(p, what);
}

/// Keeps the running maximum ratio; the first tuple attaining it wins.
class MaxTracker {
 public:
  MaxTracker(HypothesisReport& report, const EstimateOptions& options) : report_(report), options_(options) {}

  template <typename MakeWitness>
  void offer(double lhs, double rhs, double ratio, std::initializer_list<std::size_t> indices, double t,
             MakeWitness&& make_witness) {
    ++report_.evaluated;
    if (options_.dump_ratios) report_.ratios.push_back({std::vector<std::size_t>(indices), t, ratio});
    if (!report_.witness || ratio > report_.k_hat) {
      report_.k_hat = ratio;
      HypothesisWitness w = make_witness();
      w.t = t;
      w.lhs = lhs;
      w.rhs = rhs;
      w.ratio = ratio;
      report_.witness = std::move(w);
    }
  }

 private:
  HypothesisReport& report_;
  const EstimateOptions& options_;
};

struct PairImages {
  std::optional<Point> first;   // Tx (or Sy)
  std::optional<Point> second;  // STx (or TSy)
};

std::vector<PairImages> pair_images(const std::vector<Point>& points, const Mapping& inner,
                                    const CarrierSpace& inner_codomain, const Mapping& outer,
                                    const CarrierSpace& outer_codomain) {
  std::vector<PairImages> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      Point a = image(inner, points[i], inner_codomain);
      Point b = image(outer, a, outer_codomain);
      out[i] = {std::move(a), std::move(b)};
    } catch (const DomainError&) {
      out[i] = {};
    }
  }
  return out;
}

HypothesisReport estimate_pair_generic(std::string name, const std::vector<Point>& points, const Mapping& inner,
                                       const Mapping& outer, const FuzzyMetric& home, const FuzzyMetric& other,
                                       const SampleSet& samples, const EstimateOptions& options,
                                       const char* label) {
  HypothesisReport report = blank_report(std::move(name), samples);
  if (points.empty()) throw EmptySampleError("hypothesis sample is empty");
  require_points(points, home.carrier(), label);
  const auto images = pair_images(points, inner, other.carrier(), outer, home.carrier());
  const std::size_t nt = samples.grid.size();
  MaxTracker tracker(report, options);
  const std::string l1 = label;
  const std::string l2 = l1 + "'";

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (samples.exclude_diagonal && home.carrier().equal(points[i], points[j], samples.point_tol)) {
        report.skip("diagonal", nt);
        continue;
      }
      if (!images[i].second || !images[j].second) {
        report.skip("codomain", nt);
        continue;
      }
      const Point& f_i = *images[i].first;
      const Point& f_j = *images[j].first;
      const Point& c_i = *images[i].second;
      const Point& c_j = *images[j].second;
      for (double t : samples.grid) {
        const double lhs = home(c_i, c_j, t);
        const double rhs = min4(home(points[i], points[j], t), home(points[i], c_i, t), home(points[j], c_j, t),
                                other(f_i, f_j, t));
        tracker.offer(lhs, rhs, rhs / lhs, {i, j}, t, [&] {
          return HypothesisWitness{{l1, l2}, {points[i], points[j]}};
        });
      }
    }
  }
  if (report.evaluated == 0) throw EmptySampleError("every tuple of the " + report.inequality + " sample was skipped");
  return report;
}

}  // namespace

LhsRhs pair_lhs_rhs(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
                    const Point& x2, double t) {
  const Point tx = image(pair.T, x, nu.carrier());
  const Point tx2 = image(pair.T, x2, nu.carrier());
  const Point stx = image(pair.S, tx, mu.carrier());
  const Point stx2 = image(pair.S, tx2, mu.carrier());
  const double lhs = mu(stx, stx2, t);
  const double rhs = min4(mu(x, x2, t), mu(x, stx, t), mu(x2, stx2, t), nu(tx, tx2, t));
  return {lhs, rhs};
}

LhsRhs pair_dual_lhs_rhs(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& y,
                         const Point& y2, double t) {
  const Point sy = image(pair.S, y, mu.carrier());
  const Point sy2 = image(pair.S, y2, mu.carrier());
  const Point tsy = image(pair.T, sy, nu.carrier());
  const Point tsy2 = image(pair.T, sy2, nu.carrier());
  const double lhs = nu(tsy, tsy2, t);
  const double rhs = min4(nu(y, y2, t), nu(y, tsy, t), nu(y2, tsy2, t), mu(sy, sy2, t));
  return {lhs, rhs};
}

HypothesisReport estimate_k_pair(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                 const SampleSet& samples, EstimateOptions options) {
  return estimate_pair_generic("pair", samples.points_x, pair.T, pair.S, mu, nu, samples, options, "x");
}

HypothesisReport estimate_k_pair_dual(const MapPair& pair, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                      const SampleSet& samples, EstimateOptions options) {
  return estimate_pair_generic("pair-dual", samples.points_y, pair.S, pair.T, nu, mu, samples, options, "y");
}

// --- Quadruple scheme ------------------------------------------------------

QuadTerms quad_terms(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
                     const Point& x2, const Point& y, const Point& y2, double t) {
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  const Point ax = image(quad.A, x, Y);
  const Point bx2 = image(quad.B, x2, Y);
  const Point sax = image(quad.S, ax, X);
  const Point tbx2 = image(quad.T, bx2, X);
  const Point sy = image(quad.S, y, X);
  const Point ty2 = image(quad.T, y2, X);
  const Point aty2 = image(quad.A, ty2, Y);
  const Point bsy = image(quad.B, sy, Y);

  const double m_xx = mu(x, x2, t);
  const double n_ab = nu(ax, bx2, t);
  const double m_st = mu(sy, ty2, t);
  const double n_yy = nu(y, y2, t);

  QuadTerms q;
  q.lhs_x = mu(sax, tbx2, t);
  q.lhs_y = nu(bsy, aty2, t);
  q.f = min4(m_xx * n_ab, m_xx * m_st, mu(x, ty2, t) * nu(ax, aty2, t), mu(x2, sy, t) * nu(bx2, bsy, t));
  q.g = min4(n_yy * m_st, n_yy * n_ab, nu(y, bx2, t) * mu(sy, tbx2, t), nu(y2, ax, t) * mu(ty2, sax, t));
  q.h = min4(n_ab, q.lhs_x, m_st, q.lhs_y);
  return q;
}

double quad_f(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t) {
  return quad_terms(quad, mu, nu, x, x2, y, y2, t).f;
}

double quad_g(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t) {
  return quad_terms(quad, mu, nu, x, x2, y, y2, t).g;
}

double quad_h(const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu, const Point& x,
              const Point& x2, const Point& y, const Point& y2, double t) {
  return quad_terms(quad, mu, nu, x, x2, y, y2, t).h;
}

namespace {

/// Pairwise nearness of two point lists over a grid, laid out [a][b][t].
class NearnessTable {
 public:
  NearnessTable() = default;
  NearnessTable(const std::vector<std::optional<Point>>& as, const std::vector<std::optional<Point>>& bs,
                const FuzzyMetric& fm, const TGrid& grid)
      : nb_(bs.size()), nt_(grid.size()), values_(as.size() * bs.size() * grid.size(), 0.0) {
    for (std::size_t a = 0; a < as.size(); ++a) {
      if (!as[a]) continue;
      for (std::size_t b = 0; b < bs.size(); ++b) {
        if (!bs[b]) continue;
        for (std::size_t k = 0; k < nt_; ++k) values_[(a * nb_ + b) * nt_ + k] = fm(*as[a], *bs[b], grid[k]);
      }
    }
  }
  [[nodiscard]] const double* at(std::size_t a, std::size_t b) const { return &values_[(a * nb_ + b) * nt_]; }

 private:
  std::size_t nb_ = 0, nt_ = 0;
  std::vector<double> values_;
};

std::vector<std::optional<Point>> wrap(const std::vector<Point>& pts) {
  return {pts.begin(), pts.end()};
}

template <typename F>
std::vector<std::optional<Point>> transform(const std::vector<std::optional<Point>>& pts, F&& f) {
  std::vector<std::optional<Point>> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i]) continue;
    try {
      out[i] = f(*pts[i]);
    } catch (const DomainError&) {
    }
  }
  return out;
}

/// Points valid only where every listed image exists.
std::vector<bool> valid_mask(std::initializer_list<const std::vector<std::optional<Point>>*> lists) {
  std::vector<bool> ok((*lists.begin())->size(), true);
  for (const auto* l : lists) {
    for (std::size_t i = 0; i < l->size(); ++i) ok[i] = ok[i] && (*l)[i].has_value();
  }
  return ok;
}

}  // namespace

std::pair<HypothesisReport, HypothesisReport> estimate_k_quad(const MapQuadruple& quad, const FuzzyMetric& mu,
                                                              const FuzzyMetric& nu, const SampleSet& samples,
                                                              EstimateOptions options) {
  HypothesisReport rx = blank_report("quad-x", samples);
  HypothesisReport ry = blank_report("quad-y", samples);
  const auto& xs = samples.points_x;
  const auto& ys = samples.points_y;
  if (xs.empty() || ys.empty()) throw EmptySampleError("hypothesis sample is empty");
  const CarrierSpace& X = mu.carrier();
  const CarrierSpace& Y = nu.carrier();
  require_points(xs, X, "x");
  require_points(ys, Y, "y");

  const auto px = wrap(xs);
  const auto py = wrap(ys);
  const auto ax = transform(px, [&](const Point& p) { return image(quad.A, p, Y); });
  const auto bx = transform(px, [&](const Point& p) { return image(quad.B, p, Y); });
  const auto sax = transform(ax, [&](const Point& p) { return image(quad.S, p, X); });
  const auto tbx = transform(bx, [&](const Point& p) { return image(quad.T, p, X); });
  const auto sy = transform(py, [&](const Point& p) { return image(quad.S, p, X); });
  const auto ty = transform(py, [&](const Point& p) { return image(quad.T, p, X); });
  const auto aty = transform(ty, [&](const Point& p) { return image(quad.A, p, Y); });
  const auto bsy = transform(sy, [&](const Point& p) { return image(quad.B, p, Y); });
  const auto ok_x = valid_mask({&ax, &bx, &sax, &tbx});
  const auto ok_y = valid_mask({&sy, &ty, &aty, &bsy});

  const TGrid& grid = samples.grid;
  const NearnessTable XX(px, px, mu, grid), AB(ax, bx, nu, grid), SATB(sax, tbx, mu, grid);
  const NearnessTable YY(py, py, nu, grid), ST(sy, ty, mu, grid), BSAT(bsy, aty, nu, grid);
  const NearnessTable xT(px, ty, mu, grid), AAT(ax, aty, nu, grid);
  const NearnessTable xS(px, sy, mu, grid), BBS(bx, bsy, nu, grid);
  const NearnessTable yB(py, bx, nu, grid), STB(sy, tbx, mu, grid);
  const NearnessTable yA(py, ax, nu, grid), TSA(ty, sax, mu, grid);

  const std::size_t nt = grid.size();
  MaxTracker track_x(rx, options), track_y(ry, options);
  std::size_t cond_x = 0, cond_y = 0;
  auto witness = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return HypothesisWitness{{"x", "x'", "y", "y'"}, {xs[i], xs[j], ys[k], ys[l]}};
  };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (std::size_t k = 0; k < ys.size(); ++k) {
        for (std::size_t l = 0; l < ys.size(); ++l) {
          if (!ok_x[i] || !ok_x[j] || !ok_y[k] || !ok_y[l]) {
            rx.skip("codomain", nt);
            ry.skip("codomain", nt);
            continue;
          }
          const double* m_xx = XX.at(i, j);
          const double* n_ab = AB.at(i, j);
          const double* m_satb = SATB.at(i, j);
          const double* n_yy = YY.at(k, l);
          const double* m_st = ST.at(k, l);
          const double* n_bsat = BSAT.at(k, l);
          const double* m_xt = xT.at(i, l);
          const double* n_aat = AAT.at(i, l);
          const double* m_xs = xS.at(j, k);
          const double* n_bbs = BBS.at(j, k);
          const double* n_yb = yB.at(k, j);
          const double* m_stb = STB.at(k, j);
          const double* n_ya = yA.at(l, i);
          const double* m_tsa = TSA.at(l, i);
          for (std::size_t kt = 0; kt < nt; ++kt) {
            const double f = min4(m_xx[kt] * n_ab[kt], m_xx[kt] * m_st[kt], m_xt[kt] * n_aat[kt],
                                  m_xs[kt] * n_bbs[kt]);
            const double g = min4(n_yy[kt] * m_st[kt], n_yy[kt] * n_ab[kt], n_yb[kt] * m_stb[kt],
                                  n_ya[kt] * m_tsa[kt]);
            const double h = min4(n_ab[kt], m_satb[kt], m_st[kt], n_bsat[kt]);
            const double t = grid[kt];
            if (f < h && h < 1.0) {
              const double rhs = f / h;
              track_x.offer(m_satb[kt], rhs, rhs / m_satb[kt], {i, j, k, l}, t, [&] { return witness(i, j, k, l); });
            } else {
              ++cond_x;
            }
            if (g < h && h < 1.0) {
              const double rhs = g / h;
              track_y.offer(n_bsat[kt], rhs, rhs / n_bsat[kt], {i, j, k, l}, t, [&] { return witness(i, j, k, l); });
            } else {
              ++cond_y;
            }
          }
        }
      }
    }
  }
  if (cond_x > 0) rx.skip("condition", cond_x);
  if (cond_y > 0) ry.skip("condition", cond_y);
  if (rx.evaluated == 0 && ry.evaluated == 0) {
    throw EmptySampleError("every tuple of the quadruple sample was skipped");
  }
  return {std::move(rx), std::move(ry)};
}

// --- Self-map quadruple ----------------------------------------------------

QuadTerms self_quad_terms(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t) {
  const CarrierSpace& X = mu.carrier();
  const Point ax = image(quad.A, x, X);
  const Point sx = image(quad.S, x, X);
  const Point sax = image(quad.S, ax, X);
  const Point bsx = image(quad.B, sx, X);
  const Point by = image(quad.B, y, X);
  const Point ty = image(quad.T, y, X);
  const Point tby = image(quad.T, by, X);
  const Point aty = image(quad.A, ty, X);

  const double m_a_bs = mu(ax, bsx, t);
  const double m_s_tb = mu(sx, tby, t);
  const double m_x_s = mu(x, sx, t);
  const double m_xy = mu(x, y, t);
  const double m_sa_t = mu(sax, ty, t);

  QuadTerms q;
  q.lhs_x = mu(sax, tby, t);
  q.lhs_y = mu(bsx, aty, t);
  q.f = min4(mu(sx, ty, t) * m_a_bs, m_s_tb * m_x_s, m_xy * m_sa_t, mu(x, ty, t) * mu(x, aty, t));
  q.g = min4(m_x_s * m_xy, mu(y, tby, t) * mu(y, ax, t), m_sa_t * mu(ax, by, t), mu(ax, aty, t) * mu(sax, sx, t));
  q.h = min4(m_a_bs, mu(x, sax, t), m_s_tb, mu(by, aty, t));
  return q;
}

double self_quad_f(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t) {
  return self_quad_terms(quad, mu, x, y, t).f;
}

double self_quad_g(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t) {
  return self_quad_terms(quad, mu, x, y, t).g;
}

double self_quad_h(const MapQuadruple& quad, const FuzzyMetric& mu, const Point& x, const Point& y, double t) {
  return self_quad_terms(quad, mu, x, y, t).h;
}

std::pair<HypothesisReport, HypothesisReport> estimate_k_self_quad(const MapQuadruple& quad, const FuzzyMetric& mu,
                                                              const SampleSet& samples, EstimateOptions options) {
  HypothesisReport rx = blank_report("self-quad-x", samples);
  HypothesisReport ry = blank_report("self-quad-y", samples);
  const auto& xs = samples.points_x;
  const auto& ys = samples.points_y;
  if (xs.empty() || ys.empty()) throw EmptySampleError("hypothesis sample is empty");
  require_points(xs, mu.carrier(), "x");
  require_points(ys, mu.carrier(), "y");
  const std::size_t nt = samples.grid.size();
  MaxTracker track_x(rx, options), track_y(ry, options);
  auto witness = [&](std::size_t i, std::size_t k) { return HypothesisWitness{{"x", "y"}, {xs[i], ys[k]}}; };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < ys.size(); ++k) {
      try {
        (void)self_quad_terms(quad, mu, xs[i], ys[k], samples.grid.front());
      } catch (const DomainError&) {
        rx.skip("codomain", nt);
        ry.skip("codomain", nt);
        continue;
      }
      for (double t : samples.grid) {
        const QuadTerms q = self_quad_terms(quad, mu, xs[i], ys[k], t);
        if (q.f < q.h && q.h < 1.0) {
          const double rhs = q.f / q.h;
          track_x.offer(q.lhs_x, rhs, rhs / q.lhs_x, {i, k}, t, [&] { return witness(i, k); });
        } else {
          rx.skip("condition");
        }
        if (q.g < q.h && q.h < 1.0) {
          const double rhs = q.g / q.h;
          track_y.offer(q.lhs_y, rhs, rhs / q.lhs_y, {i, k}, t, [&] { return witness(i, k); });
        } else {
          ry.skip("condition");
        }
      }
    }
  }
  if (rx.evaluated == 0 && ry.evaluated == 0) {
    throw EmptySampleError("every tuple of the self-map sample was skipped");
  }
  return {std::move(rx), std::move(ry)};
}

// --- Recurrences ------------------------------------------------------------

namespace {

class RecurrenceChecker {
 public:
  explicit RecurrenceChecker(double k) { report_.k = k; report_.worst_margin = k; }

  void check(const char* equation, std::size_t n, double t, double lhs, double rhs) {
    ++report_.checked;
    const double ratio = rhs / lhs;
    report_.max_ratio = std::max(report_.max_ratio, ratio);
    report_.worst_margin = std::min(report_.worst_margin, report_.k - ratio);
    if (ratio > report_.k) {
      ++report_.violations;
      ++report_.violations_by_equation[equation];
      if (!report_.first_violation) report_.first_violation = RecurrenceViolation{equation, n, t, lhs, rhs};
    }
  }
  void skip(std::size_t count) { report_.skipped += count; }
  RecurrenceReport take() { return std::move(report_); }

 private:
  RecurrenceReport report_;
};

void require_traces(const SequenceTrace& tx, const SequenceTrace& ty, double k) {
  if (tx.size() < 2 || ty.size() < 2) throw UsageError("recurrence check needs traces of length >= 2");
  if (!(k > 0.0)) throw UsageError("recurrence check needs k > 0");
  if (tx.first_index != 0 || ty.first_index != 1) {
    throw UsageError("recurrence check expects x-trace from index 0 and y-trace from index 1");
  }
}

/// k mu(x_n, x_{n+1}) >= min{mu(x_{n-1}, x_n), nu(y_n, y_{n+1})}   for n >= 1,
/// k nu(y_n, y_{n+1}) >= min{nu(y_{n-1}, y_n), mu(x_{n-1}, x_n)}   for n >= 2.
/// The interleaved scheme shares the x-form; its y-form pairs
/// nu(y_{n-1}, y_n) with mu(x_n, x_{n+1}) instead.
RecurrenceReport run_recurrences(const SequenceTrace& tx, const SequenceTrace& ty, const FuzzyMetric& mu,
                                 const FuzzyMetric& nu, double k, const TGrid& grid, double point_tol,
                                 bool interleaved) {
  RecurrenceChecker checker(k);
  const std::size_t nt = grid.size();
  const std::size_t last_x = tx.last_index();
  const std::size_t last_y = ty.last_index();

  for (std::size_t n = 1; n + 1 <= last_x && n + 1 <= last_y; ++n) {
    if (mu.carrier().equal(tx.at(n - 1), tx.at(n), point_tol)) {
      checker.skip(nt);
      continue;
    }
    const char* eq = interleaved ? (n % 2 == 0 ? "x-even" : "x-odd") : "x";
    for (double t : grid) {
      const double lhs = mu(tx.at(n), tx.at(n + 1), t);
      const double rhs = std::min(mu(tx.at(n - 1), tx.at(n), t), nu(ty.at(n), ty.at(n + 1), t));
      checker.check(eq, n, t, lhs, rhs);
    }
  }
  for (std::size_t n = 2; n + 1 <= last_y; ++n) {
    if (interleaved ? n + 1 > last_x : n > last_x) break;
    if (nu.carrier().equal(ty.at(n - 1), ty.at(n), point_tol)) {
      checker.skip(nt);
      continue;
    }
    const char* eq = interleaved ? (n % 2 == 0 ? "y-even" : "y-odd") : "y";
    for (double t : grid) {
      const double lhs = nu(ty.at(n), ty.at(n + 1), t);
      const double x_term = interleaved ? mu(tx.at(n), tx.at(n + 1), t) : mu(tx.at(n - 1), tx.at(n), t);
      const double rhs = std::min(nu(ty.at(n - 1), ty.at(n), t), x_term);
      checker.check(eq, n, t, lhs, rhs);
    }
  }
  return checker.take();
}

}  // namespace

RecurrenceReport check_recurrence_pair(const SequenceTrace& trace_x, const SequenceTrace& trace_y,
                                       const FuzzyMetric& mu, const FuzzyMetric& nu, double k, const TGrid& grid,
                                       double point_tol) {
  require_traces(trace_x, trace_y, k);
  return run_recurrences(trace_x, trace_y, mu, nu, k, grid, point_tol, false);
}

RecurrenceReport check_recurrence_quad(const SequenceTrace& trace_x, const SequenceTrace& trace_y,
                                       const MapQuadruple& quad, const FuzzyMetric& mu, const FuzzyMetric& nu,
                                       double k, const TGrid& grid, double point_tol) {
  require_traces(trace_x, trace_y, k);
  for (std::size_t m = 1; m <= trace_y.last_index() && m <= trace_x.last_index() + 1; ++m) {
    const bool odd = m % 2 == 1;
    if (!((odd ? quad.A : quad.B)(trace_x.at(m - 1)) == trace_y.at(m))) {
      throw UsageError("trace does not follow the interleaved scheme at y_" + std::to_string(m));
    }
    if (m <= trace_x.last_index() && !((odd ? quad.S : quad.T)(trace_y.at(m)) == trace_x.at(m))) {
      throw UsageError("trace does not follow the interleaved scheme at x_" + std::to_string(m));
    }
  }
  return run_recurrences(trace_x, trace_y, mu, nu, k, grid, point_tol, true);
}

}  // namespace fuzzyfp
