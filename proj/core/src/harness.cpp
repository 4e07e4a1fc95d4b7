#include "fuzzyfp/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "fuzzyfp/axioms.hpp"
#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/hypotheses.hpp"
#include "fuzzyfp/rng.hpp"

namespace fuzzyfp {

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::pair: return "pair";
    case Scheme::quadruple: return "quadruple";
    case Scheme::self_quadruple: return "self-quadruple";
  }
  return "?";
}

std::string_view to_string(MapFamily f) noexcept {
  switch (f) {
    case MapFamily::affine: return "affine";
    case MapFamily::constant: return "constant";
    case MapFamily::mixed: return "mixed";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "pair") return Scheme::pair;
  if (name == "quadruple") return Scheme::quadruple;
  if (name == "self-quadruple") return Scheme::self_quadruple;
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

MapFamily parse_family(std::string_view name) {
  if (name == "affine") return MapFamily::affine;
  if (name == "constant") return MapFamily::constant;
  if (name == "mixed") return MapFamily::mixed;
  throw ConfigError("unknown map family '" + std::string(name) + "'");
}

void InstanceSpec::validate() const {
  if (dim == 0) throw ConfigError("instance dim must be at least 1");
  if (!(factor_lo <= factor_hi)) throw ConfigError("instance factor range is empty");
  if (expansive) {
    if (!(factor_lo > 1.0) || !std::isfinite(factor_hi)) throw ConfigError("expansive factors must lie in (1, inf)");
  } else if (!(factor_lo > 0.0) || !(factor_hi < 1.0)) {
    throw ConfigError("contraction factors must lie in (0, 1)");
  }
  if (metric == FuzzyMetricForm::table) throw ConfigError("generated instances need an induced fuzzy metric");
  if (crisp == CrispMetric::table) throw ConfigError("generated instances live in boxes; table metric unsupported");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw ConfigError("instance half_width must be positive");
}

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<double> to_vector(const RowMatrix& m) { return {m.data(), m.data() + m.size()}; }

std::vector<double> uniform_vector(Rng& rng, std::size_t n, double radius) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-radius, radius);
  return v;
}

RowMatrix random_matrix(Rng& rng, std::size_t dim) {
  RowMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  }
  return m;
}

/// Linear part with spectral and max-row-sum norms both <= factor (contractive)
/// or factor times an orthogonal matrix (expansive: every direction stretched).
RowMatrix linear_part(Rng& rng, std::size_t dim, double factor, bool expansive) {
  RowMatrix m = random_matrix(rng, dim);
  if (expansive) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    return factor * RowMatrix(q);
  }
  const auto flat = to_vector(m);
  const double norm = std::max(operator_norm(dim, dim, flat, CrispMetric::euclidean),
                               operator_norm(dim, dim, flat, CrispMetric::max));
  if (norm == 0.0) return m;
  return m * (factor / norm);
}

/// x -> M (x - from) + to.
Mapping anchored(const RowMatrix& m, const std::vector<double>& from, const std::vector<double>& to) {
  const auto n = static_cast<Eigen::Index>(from.size());
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(to.data(), n) -
                      m * Eigen::Map<const Eigen::VectorXd>(from.data(), n);
  return Mapping::affine(from.size(), from.size(), to_vector(m), {b.data(), b.data() + b.size()});
}

double draw_factor(Rng& rng, const InstanceSpec& spec) {
  return spec.factor_lo == spec.factor_hi ? spec.factor_lo : rng.uniform(spec.factor_lo, spec.factor_hi);
}

}  // namespace

Instance gen_instance(const InstanceSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const std::size_t n = spec.dim;
  const double L = spec.half_width;

  CarrierSpace carrier = spec.expansive
                             ? CarrierSpace::unbounded(n, spec.crisp)
                             : CarrierSpace::box(std::vector<double>(n, -L), std::vector<double>(n, L), spec.crisp);
  auto make_metric = [&](const CarrierSpace& c) {
    return spec.metric == FuzzyMetricForm::induced_exponential ? induced_exponential(c) : induced_standard(c);
  };

  const std::size_t map_count = spec.scheme == Scheme::pair ? 2 : 4;
  std::vector<double> factors(map_count);
  for (auto& f : factors) f = draw_factor(rng, spec);
  std::vector<RowMatrix> linear(map_count);
  for (std::size_t i = 0; i < map_count; ++i) linear[i] = linear_part(rng, n, factors[i], spec.expansive);

  // Which maps are affine (the rest are constant).
  auto is_affine = [&](std::size_t i) {
    if (spec.family == MapFamily::affine) return true;
    if (spec.family == MapFamily::constant) return false;
    return i < map_count / 2;
  };
  for (std::size_t i = 0; i < map_count; ++i) {
    if (!is_affine(i)) factors[i] = 0.0;
  }

  if (spec.scheme == Scheme::pair) {
    std::vector<Mapping> maps;
    for (std::size_t i = 0; i < 2; ++i) {
      if (is_affine(i)) {
        const double c = std::min(factors[i], 1.0);
        auto b = uniform_vector(rng, n, (1.0 - c) * L);
        maps.push_back(Mapping::affine(n, n, to_vector(linear[i]), std::move(b)));
      } else {
        maps.push_back(Mapping::constant(Point(uniform_vector(rng, n, L / 2))));
      }
    }
    return Instance{spec, MapPair{maps[0], maps[1]}, make_metric(carrier), make_metric(carrier), factors, {}, {}};
  }

  // Anchors inside the box far enough in that every anchored contraction maps
  // [-L, L]^n into itself: |M (x - z) + w| <= c (L + r) + r <= L.
  const double c_max = spec.expansive ? 0.0 : *std::max_element(factors.begin(), factors.end());
  const double r = (1.0 - c_max) * L / 2.0;
  const auto z = uniform_vector(rng, n, r);
  const auto w = uniform_vector(rng, n, r);
  std::vector<Mapping> maps;
  for (std::size_t i = 0; i < 4; ++i) {
    const bool x_to_y = i < 2;  // A, B: X -> Y; S, T: Y -> X
    const auto& from = x_to_y ? z : w;
    const auto& to = x_to_y ? w : z;
    maps.push_back(is_affine(i) ? anchored(linear[i], from, to) : Mapping::constant(Point(to)));
  }
  return Instance{spec,
                  MapQuadruple{maps[0], maps[1], maps[2], maps[3]},
                  make_metric(carrier),
                  make_metric(carrier),
                  factors,
                  Point(z),
                  Point(w)};
}

std::vector<InstanceSpec> expand_specs(const InstanceSpec& base, std::size_t count) {
  std::vector<InstanceSpec> out(count, base);
  for (std::size_t i = 0; i < count; ++i) out[i].seed = base.seed + i;
  return out;
}

namespace {

constexpr std::uint64_t kStartStream = 0x9E3779B97F4A7C15ull;

std::vector<Point> spread_from(const SequenceTrace& trace, std::size_t count) {
  std::vector<Point> out;
  const std::size_t n = trace.size();
  if (n == 0 || count == 0) return out;
  if (n <= count) return trace.points;
  for (std::size_t i = 0; i < count; ++i) out.push_back(trace.points[i * (n - 1) / (count - 1 > 0 ? count - 1 : 1)]);
  return out;
}

/// Largest k_hat over the scheme's inequalities; NaN if nothing was admitted.
double scheme_k_hat(const Instance& inst, const SampleSet& samples) {
  double k = -1.0;
  auto take = [&](const HypothesisReport& r) {
    if (r.evaluated > 0) k = std::max(k, r.k_hat);
  };
  try {
    if (const auto* pair = std::get_if<MapPair>(&inst.problem)) {
      try {
        take(estimate_k_pair(*pair, inst.mu, inst.nu, samples));
      } catch (const EmptySampleError&) {
      }
      try {
        take(estimate_k_pair_dual(*pair, inst.mu, inst.nu, samples));
      } catch (const EmptySampleError&) {
      }
    } else {
      const auto& quad = std::get<MapQuadruple>(inst.problem);
      const auto reports = inst.spec.scheme == Scheme::self_quadruple
                               ? estimate_k_self_quad(quad, inst.mu, samples)
                               : estimate_k_quad(quad, inst.mu, inst.nu, samples);
      take(reports.first);
      take(reports.second);
    }
  } catch (const EmptySampleError&) {
  }
  return k < 0.0 ? std::numeric_limits<double>::quiet_NaN() : k;
}

}  // namespace

VerdictRow run_instance(std::size_t index, const InstanceSpec& spec, const SolveConfig& cfg,
                        const SuiteOptions& options) {
  VerdictRow row;
  row.index = index;
  row.seed = spec.seed;
  row.scheme = spec.scheme;
  row.family = spec.family;
  row.dim = spec.dim;
  row.expansive = spec.expansive;
  try {
    const Instance inst = gen_instance(spec);
    row.factors = inst.factors;

    SolveConfig local = cfg;
    local.grid = spec.grid;

    row.axiom_violations = check_fm_axioms(inst.mu, options.tnorm, options.axiom_triples, spec.grid, spec.seed).total();
    if (spec.scheme != Scheme::self_quadruple) {
      row.axiom_violations += check_fm_axioms(inst.nu, options.tnorm, options.axiom_triples, spec.grid,
                                              spec.seed + 1).total();
    }

    Rng rng(spec.seed ^ kStartStream);
    const CarrierSpace& X = inst.mu.carrier();
    const CarrierSpace& Y = inst.nu.carrier();
    std::vector<Point> starts;
    for (std::size_t i = 0; i < std::max<std::size_t>(options.uniqueness_starts, 1); ++i) starts.push_back(X.sample(rng));

    const FixedPointResult result = solve(inst.problem, inst.mu, inst.nu, starts.front(), local);
    row.status = result.status;
    row.iterations = result.iterations;
    row.z = result.z;
    row.w = result.w;
    row.min_residual = result.conclusions.min_residual();
    row.conclusions_pass = result.conclusions.pass;

    SampleSet samples;
    samples.grid = spec.grid;
    samples.points_x = spread_from(result.trace_x, options.trajectory_samples);
    samples.points_y = spread_from(result.trace_y, options.trajectory_samples);
    std::erase_if(samples.points_x, [&](const Point& p) { return !X.contains(p); });
    std::erase_if(samples.points_y, [&](const Point& p) { return !Y.contains(p); });
    for (std::size_t i = 0; i < options.random_samples; ++i) samples.points_x.push_back(X.sample(rng));
    const CarrierSpace& second = spec.scheme == Scheme::self_quadruple ? X : Y;
    for (std::size_t i = 0; i < options.random_samples; ++i) samples.points_y.push_back(second.sample(rng));

    row.grid_t_max.push_back(spec.grid.back());
    row.k_hat.push_back(scheme_k_hat(inst, samples));
    for (double scale : options.vacuity_scales) {
      SampleSet wide = samples;
      wide.grid = spec.grid.extended_to(spec.grid.back() * scale);
      row.grid_t_max.push_back(wide.grid.back());
      row.k_hat.push_back(scheme_k_hat(inst, wide));
    }
    row.hypothesis_holds = !std::isnan(row.k_hat.front()) && row.k_hat.front() < 1.0;

    if (options.uniqueness_starts >= 2) {
      const UniquenessReport u = uniqueness_probe(inst.problem, inst.mu, inst.nu, starts, local);
      row.uniqueness_conclusive = u.conclusive;
      row.unique = u.unique;
      row.uniqueness_spread = std::max(u.max_distance_z, u.max_distance_w);
    }

    row.passed = spec.expansive ? row.status == SolveStatus::diverging
                                : row.status == SolveStatus::converged && row.conclusions_pass &&
                                      (options.uniqueness_starts < 2 || row.unique);
  } catch (const std::exception& e) {
    row.error = e.what();
    row.passed = false;
  }
  return row;
}

SuiteVerdict run_suite(const std::vector<InstanceSpec>& specs, const SolveConfig& cfg, const SuiteOptions& options) {
  if (specs.empty()) throw UsageError("run_suite: empty spec list");
  cfg.validate();

  SuiteVerdict verdict;
  verdict.rows.resize(specs.size());
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, specs.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) verdict.rows[i] = run_instance(i, specs[i], cfg, options);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < specs.size(); i += workers) verdict.rows[i] = run_instance(i, specs[i], cfg, options);
      });
    }
  }

  verdict.instances = verdict.rows.size();
  for (const auto& row : verdict.rows) {
    verdict.converged += row.status == SolveStatus::converged && row.error.empty();
    verdict.diverging += row.status == SolveStatus::diverging && row.error.empty();
    verdict.max_iter += row.status == SolveStatus::max_iter && row.error.empty();
    verdict.conclusions_pass += row.conclusions_pass;
    verdict.unique += row.unique;
    verdict.hypothesis_holds += row.hypothesis_holds;
    verdict.axiom_clean += row.error.empty() && row.axiom_violations == 0;
    verdict.passed += row.passed;
    verdict.errors += !row.error.empty();
  }
  return verdict;
}

}  // namespace fuzzyfp
