// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status is
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "fuzzyfp/axioms.hpp"
#include "fuzzyfp/harness.hpp"
#include "fuzzyfp/hypotheses.hpp"
#include "fuzzyfp/solver.hpp"

namespace fs = std::filesystem;
using namespace fuzzyfp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

FuzzyMetric line_mu() { return induced_standard(CarrierSpace::unbounded(1)); }

MapPair linear_pair() { return {Mapping::affine_1d(0.5, 1.0), Mapping::affine_1d(1.0 / 3.0, 1.0)}; }

double nearness(double a, double b, double t) { return t / (t + std::abs(a - b)); }

// Primal pair ratio for 1-D affine T(x) = a x + b, S(y) = c y + d in plain arithmetic.
double pair_ratio_oracle(double a, double b, double c, double d, double x, double x2, double t) {
  const double tx = a * x + b, tx2 = a * x2 + b;
  const double st = c * tx + d, st2 = c * tx2 + d;
  const double rhs = std::min(std::min(nearness(x, x2, t), nearness(x, st, t)),
                              std::min(nearness(x2, st2, t), nearness(tx, tx2, t)));
  return rhs / nearness(st, st2, t);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome closed_form_pair() {
  Outcome o;
  const auto start = Clock::now();
  const FixedPointResult r = iterate_pair(linear_pair(), line_mu(), line_mu(), Point{0.0});
  const double secs = seconds_since(start);
  o.require(r.status == SolveStatus::converged, "converged");
  o.require(r.iterations <= 60, "iterations <= 60");
  o.require(std::abs(r.z[0] - 1.6) <= 1e-6, "z = 1.6 +- 1e-6");
  o.require(std::abs(r.w[0] - 1.8) <= 1e-6, "w = 1.8 +- 1e-6");
  o.require(r.conclusions.residuals.size() == 4, "four residuals");
  for (const auto& res : r.conclusions.residuals) o.require(res.value >= 1.0 - 1e-6, res.name + " >= 1 - 1e-6");
  o.require(secs < 1.0, "runtime < 1 s");
  o.note("iterations " + std::to_string(r.iterations) + ", z " + num(r.z[0], 10) + ", w " + num(r.w[0], 10) +
         ", min residual " + num(r.conclusions.min_residual(), 12) + ", " + num(secs, 3) + " s");
  return o;
}

Outcome suite_soundness() {
  Outcome o;
  InstanceSpec pair_spec;
  pair_spec.seed = 1;
  InstanceSpec quad_spec;
  quad_spec.scheme = Scheme::quadruple;
  quad_spec.seed = 101;
  auto specs = expand_specs(pair_spec, 100);
  for (const auto& s : expand_specs(quad_spec, 100)) specs.push_back(s);

  SuiteOptions options;
  options.uniqueness_starts = 4;
  const SolveConfig cfg;
  const auto start = Clock::now();
  const SuiteVerdict v = run_suite(specs, cfg, options);
  const double secs = seconds_since(start);

  std::size_t residual_ok = 0, unique_ok = 0;
  double spread = 0.0, min_res = 1.0;
  for (const auto& row : v.rows) {
    residual_ok += row.min_residual >= 1.0 - 1e-6;
    unique_ok += row.unique && row.uniqueness_spread <= 1e-6;
    spread = std::max(spread, row.uniqueness_spread);
    min_res = std::min(min_res, row.min_residual);
  }
  o.require(v.converged == 200, "200/200 converged");
  o.require(v.conclusions_pass == 200 && residual_ok == 200, "all residuals >= 1 - 1e-6");
  o.require(unique_ok == 200, "uniqueness from 4 starts within 1e-6");
  o.require(secs < 30.0, "runtime < 30 s");
  o.note("converged " + std::to_string(v.converged) + "/200, residual ok " + std::to_string(residual_ok) +
         ", unique " + std::to_string(unique_ok) + ", min residual " + num(min_res, 12) + ", max spread " +
         num(spread, 3) + ", " + num(secs, 3) + " s");
  return o;
}

Outcome negative_controls() {
  Outcome o;
  InstanceSpec spec;
  spec.expansive = true;
  spec.factor_lo = 1.1;
  spec.factor_hi = 2.0;
  spec.seed = 1;
  auto specs = expand_specs(spec, 5);
  spec.scheme = Scheme::quadruple;
  spec.seed = 6;
  for (const auto& s : expand_specs(spec, 5)) specs.push_back(s);
  const SolveConfig cfg;
  const SuiteVerdict v = run_suite(specs, cfg);
  std::size_t within = 0;
  for (const auto& row : v.rows) within += row.status == SolveStatus::diverging && row.iterations <= cfg.max_iter;
  o.require(within == 10, "10/10 diverging within max_iter");

  const MapPair doubling{Mapping::affine_1d(2.0, 0.0), Mapping::affine_1d(2.0, 0.0)};
  const auto mu = line_mu();
  const TGrid standard = TGrid::standard();
  std::vector<double> grid_values(standard.begin(), standard.end());
  grid_values.push_back(2.0);
  std::sort(grid_values.begin(), grid_values.end());
  SampleSet samples;
  samples.points_x = {Point{0.0}, Point{0.5}, Point{1.0}, Point{2.0}};
  samples.grid = TGrid(grid_values);
  const HypothesisReport rep = estimate_k_pair(doubling, mu, mu, samples);
  o.require(rep.k_hat > 1.0 && !rep.holds(), "k_hat > 1");
  o.require(rep.witness.has_value(), "witness reported");

  const LhsRhs w = pair_lhs_rhs(doubling, mu, mu, Point{0.0}, Point{0.5}, 2.0);
  const double oracle = pair_ratio_oracle(2.0, 0.0, 2.0, 0.0, 0.0, 0.5, 2.0);
  o.require(std::abs(w.lhs - 0.5) <= 1e-15 && std::abs(w.rhs - 4.0 / 7.0) <= 1e-15, "witness terms 1/2 and 4/7");
  o.require(std::abs(w.ratio() - oracle) <= 1e-15 && std::abs(w.ratio() - 1.143) <= 1e-3, "witness ratio ~ 1.143");
  o.require(rep.k_hat >= w.ratio(), "k_hat covers the witness");
  o.note("diverging " + std::to_string(within) + "/10, k_hat " + num(rep.k_hat) + ", witness (0, 0.5, t=2) ratio " +
         num(w.ratio(), 10));
  return o;
}

Outcome axiom_suites() {
  Outcome o;
  const TGrid grid = TGrid::standard();
  const CarrierSpace box = CarrierSpace::box({-10.0, -10.0}, {10.0, 10.0});
  std::size_t total = 0, runs = 0;
  for (const FuzzyMetric& fm : {induced_standard(box), induced_exponential(box)}) {
    for (TNormKind k : {TNormKind::minimum, TNormKind::product, TNormKind::lukasiewicz}) {
      const AxiomReport r = check_fm_axioms(fm, TNorm(k), 1000, grid, 42);
      total += r.total();
      ++runs;
      o.require(r.ok(), std::string(to_string(fm.form())) + " under " + std::string(to_string(k)));
    }
  }

  const cli::RunConfig broken = cli::load_config(fs::path(FUZZYFP_TEST_DATA) / "broken_table.json");
  const AxiomReport b = check_fm_axioms(*broken.mu, broken.tnorm, broken.axioms.triples, broken.grid, broken.axioms.seed);
  std::size_t other = 0;
  for (const auto& [axiom, count] : b.counts) other += axiom == "ii" ? 0 : count;
  bool planted = !b.violations.empty();
  for (const auto& v : b.violations) {
    planted = planted && v.axiom == "ii" && v.points.size() == 2 && v.points[0] == Point::at_index(0) &&
              v.points[1] == Point::at_index(0) && std::abs(v.magnitude - 0.1) <= 1e-12;
  }
  const std::size_t ii = b.counts.count("ii") ? b.counts.at("ii") : 0;
  o.require(ii > 0 && other == 0, "broken table violates axiom (ii) only");
  o.require(planted, "every violation is the planted mu(0, 0, t) = 0.9");
  o.note(std::to_string(runs) + " clean runs x 1000 triples x " + std::to_string(grid.size()) + " grid points, " +
         std::to_string(total) + " violations; broken table: " + std::to_string(ii) +
         " hits of the planted (ii) defect, " + std::to_string(other) + " other");
  return o;
}

Outcome vacuity() {
  Outcome o;
  const auto mu = line_mu();
  SampleSet samples;
  for (double x : {0.0, 0.5, 1.0, 1.5, 2.0}) samples.points_x.push_back(Point{x});
  std::vector<double> k_hat;
  std::string provenance;
  for (double t_max : {1e2, 1e3, 1e4}) {
    samples.grid = TGrid::standard().extended_to(t_max);
    const double k = estimate_k_pair(linear_pair(), mu, mu, samples).k_hat;
    double oracle = 0.0;
    for (double x : {0.0, 0.5, 1.0, 1.5, 2.0})
      for (double x2 : {0.0, 0.5, 1.0, 1.5, 2.0})
        if (x != x2)
          for (double t : samples.grid) oracle = std::max(oracle, pair_ratio_oracle(0.5, 1.0, 1.0 / 3.0, 1.0, x, x2, t));
    o.require(std::abs(k - oracle) <= 1e-12, "k_hat matches the exhaustive oracle at t_max " + num(t_max));
    k_hat.push_back(k);
    provenance += (provenance.empty() ? "" : ", ") + std::string("t_max ") + num(t_max) + ": " +
                  std::to_string(samples.grid.size()) + " points, k_hat " + num(k, 8);
  }
  // Analytic bound for the widest pair (delta = 2) at the largest t.
  const double bound = (1e4 + 2.0 / 6.0) / (1e4 + 2.0);
  o.require(k_hat[0] <= k_hat[1] && k_hat[1] <= k_hat[2], "nondecreasing in t_max");
  o.require(k_hat[2] > 0.99, "k_hat > 0.99 at t_max 1e4");
  o.require(k_hat[2] >= bound - 1e-12, "k_hat reaches the analytic ratio bound");
  o.note("grid: default 17 log-spaced points on [1e-2, 1e2] extended with the same log step; " + provenance);
  return o;
}

Outcome recurrences() {
  Outcome o;
  const auto mu = line_mu();
  const MapPair p = linear_pair();
  const FixedPointResult r = iterate_pair(p, mu, mu, Point{0.0});
  SampleSet s;
  s.points_x = r.trace_x.points;
  s.points_y = r.trace_y.points;
  const double k = std::max(estimate_k_pair(p, mu, mu, s).k_hat, estimate_k_pair_dual(p, mu, mu, s).k_hat);
  const RecurrenceReport ok = check_recurrence_pair(r.trace_x, r.trace_y, mu, mu, k, s.grid);
  const RecurrenceReport bad = check_recurrence_pair(r.trace_x, r.trace_y, mu, mu, k / 2.0, s.grid);
  const RecurrenceReport again = check_recurrence_pair(r.trace_x, r.trace_y, mu, mu, k / 2.0, s.grid);
  o.require(ok.checked > 0 && ok.violations == 0, "zero violations at k_hat");
  o.require(bad.violations >= 1 && bad.first_violation.has_value(), "violations at k_hat / 2");
  if (bad.first_violation) {
    const auto& v = *bad.first_violation;
    const SequenceTrace& tr = v.equation == "x" ? r.trace_x : r.trace_y;
    o.require(v.lhs == mu(tr.at(v.n), tr.at(v.n + 1), v.t), "witness re-evaluates");
    o.require(again.violations == bad.violations && again.first_violation->n == v.n && again.first_violation->t == v.t,
              "witness reproducible");
    o.note("k_hat " + num(k, 12) + ": " + std::to_string(ok.checked) + " checked, 0 violations; k_hat/2: " +
           std::to_string(bad.violations) + " violations, first " + v.equation + " n=" + std::to_string(v.n) +
           " t=" + num(v.t) + " ratio " + num(v.rhs / v.lhs, 8));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "fuzzyfp_acceptance";
  fs::remove_all(root);
  std::ostringstream log, err;
  std::vector<std::string> json_files, csv_files;
  for (const char* run : {"run1", "run2"}) {
    cli::CommandOptions opts;
    opts.config = fs::path(FUZZYFP_TEST_DATA) / "default_suite.json";
    opts.out = root / run;
    const int code = cli::cmd_suite(opts, log, err);
    o.require(code == cli::kExitOk, std::string(run) + " exit code");
    json_files.push_back(slurp(opts.out / "verdict.json"));
    csv_files.push_back(slurp(opts.out / "verdict.csv"));
  }
  o.require(!json_files[0].empty() && json_files[0] == json_files[1], "verdict.json byte-identical");
  o.require(!csv_files[0].empty() && csv_files[0] == csv_files[1], "verdict.csv byte-identical");
  o.note("verdict.json " + std::to_string(json_files[0].size()) + " bytes, verdict.csv " +
         std::to_string(csv_files[0].size()) + " bytes");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 closed-form pair", closed_form_pair},
      {"AC2 suite soundness", suite_soundness},
      {"AC3 negative controls", negative_controls},
      {"AC4 axiom suites", axiom_suites},
      {"AC5 vacuity of uniform k", vacuity},
      {"AC6 recurrence validation", recurrences},
      {"AC7 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
