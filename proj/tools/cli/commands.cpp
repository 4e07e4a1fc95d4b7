#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <system_error>

#include "config.hpp"
#include "fuzzyfp/axioms.hpp"
#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/harness.hpp"
#include "fuzzyfp/hypotheses.hpp"
#include "fuzzyfp/rng.hpp"
#include "fuzzyfp/solver.hpp"
#include "report.hpp"

namespace fuzzyfp::cli {
namespace {

constexpr const char* kToolName = "fuzzyfp";
constexpr const char* kToolVersion = "0.1.0";

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'" + (ec ? ": " + ec.message() : ""));
  }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

bool want_json(OutputFormat f) { return f != OutputFormat::csv; }
bool want_csv(OutputFormat f) { return f != OutputFormat::json; }

json header(const char* command, const RunConfig& cfg) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"generator", generator_json()},
          {"grid", {{"values", grid_json(cfg.grid)}, {"t_min", cfg.grid.front()}, {"t_max", cfg.grid.back()},
                    {"points", cfg.grid.size()}, {"source", cfg.grid_source}}},
          {"tolerances", {{"eps", cfg.solve.eps}, {"verify_tol", cfg.solve.verify_tol},
                          {"point_tol", cfg.solve.point_tol}, {"uniqueness_tol", cfg.solve.uniqueness_tol},
                          {"associativity_tol", kAssociativityTol}, {"triangle_tol", kTriangleTol}}},
          {"defaults", defaults_json()}};
}

// Loads the config, prepares the output directory and maps failures onto
// exit codes.
int run_command(const CommandOptions& options, std::ostream& err,
                const std::function<int(RunConfig&)>& body) {
  try {
    RunConfig cfg = load_config(options.config);
    apply_overrides(cfg, options.seed, options.t_max);
    prepare_out_dir(options.out);
    return body(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitConfig;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::string fmt(double v) { return std::isfinite(v) ? format_number(v) : "n/a"; }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "both") return OutputFormat::both;
  throw ConfigError("unknown format '" + name + "'");
}

int cmd_axioms(const CommandOptions& options, std::ostream& log, std::ostream& err) {
  return run_command(options, err, [&](RunConfig& cfg) {
    const AxiomSettings& a = cfg.axioms;
    std::vector<AxiomReport> tnorm_reports;
    for (TNormKind k : a.tnorms) tnorm_reports.push_back(check_tnorm_axioms(TNorm(k), a.tnorm_samples, a.seed));

    std::vector<std::pair<std::string, AxiomReport>> metric_reports;
    if (cfg.mu) {
      metric_reports.emplace_back("X", check_fm_axioms(*cfg.mu, cfg.tnorm, a.triples, cfg.grid, a.seed,
                                                      {cfg.solve.point_tol, CarrierSpace::kDefaultSamplingRadius}));
      if (cfg.separate_y) {
        metric_reports.emplace_back("Y", check_fm_axioms(*cfg.nu, cfg.tnorm, a.triples, cfg.grid, a.seed,
                                                        {cfg.solve.point_tol, CarrierSpace::kDefaultSamplingRadius}));
      }
    }

    std::size_t total = 0;
    json tj = json::array(), mj = json::array();
    for (const auto& r : tnorm_reports) {
      total += r.total();
      tj.push_back(to_json(r));
      log << "t-norm " << r.subject << ": " << r.sample_count << " samples, " << r.total() << " violations\n";
    }
    for (const auto& [space, r] : metric_reports) {
      total += r.total();
      json j = to_json(r);
      j["space"] = space;
      mj.push_back(j);
      log << "fuzzy metric on " << space << " (" << r.subject << "): " << r.sample_count << " triples x "
          << r.grid.size() << " grid points, " << r.total() << " violations\n";
      for (const auto& [axiom, count] : r.counts) {
        if (count == 0) continue;
        log << "  axiom (" << axiom << "): " << count << " violations";
        for (const auto& v : r.violations) {
          if (v.axiom != axiom) continue;
          log << "; first at";
          for (const auto& p : v.points) log << ' ' << p.to_string();
          for (double x : v.values) log << " t=" << format_number(x);
          log << " magnitude " << format_number(v.magnitude);
          break;
        }
        log << '\n';
      }
      for (const auto& note : r.notes) log << "  note: " << note << '\n';
    }

    json doc = header("axioms", cfg);
    doc["seed"] = a.seed;
    doc["tnorm"] = std::string(to_string(cfg.tnorm.kind()));
    doc["tnorm_reports"] = tj;
    doc["metric_reports"] = mj;
    doc["total_violations"] = total;
    doc["pass"] = total == 0;
    write_json(options.out / "axioms.json", doc);
    log << (total == 0 ? "PASS" : "FAIL") << ": " << total << " axiom violations\n";
    return total == 0 ? kExitOk : kExitFailed;
  });
}

int cmd_hypotheses(const CommandOptions& options, std::ostream& log, std::ostream& err) {
  return run_command(options, err, [&](RunConfig& cfg) {
    require(cfg.problem.has_value(), "hypotheses needs a maps section");
    const HypothesisSettings& h = cfg.hypotheses;
    Rng rng(h.seed);
    std::vector<Point> xs = h.points_x;
    for (std::size_t i = 0; i < h.random_x; ++i) xs.push_back(cfg.carrier_x->sample(rng));
    std::vector<Point> ys = h.points_y;
    for (std::size_t i = 0; i < h.random_y; ++i) ys.push_back(cfg.carrier_y->sample(rng));
    require(!xs.empty(), "hypotheses needs sample points in X (points_x or random_x)");

    std::string y_source = "config";
    if (ys.empty() && cfg.scheme == Scheme::quadruple) {
      // Images of the x sample under A and B.
      const auto& q = std::get<MapQuadruple>(*cfg.problem);
      for (const auto& x : xs) {
        for (const Mapping* f : {&q.A, &q.B}) {
          try {
            ys.push_back(image(*f, x, *cfg.carrier_y));
          } catch (const DomainError&) {
          }
        }
      }
      y_source = "images of the x sample under A and B";
    } else if (ys.empty() && cfg.scheme == Scheme::self_quadruple) {
      ys = xs;
      y_source = "the x sample";
    }

    SampleSet samples{xs, ys, cfg.grid, h.exclude_diagonal && !options.include_diagonal, cfg.solve.point_tol};
    const EstimateOptions eo{h.dump_ratios};
    std::vector<HypothesisReport> reports;
    auto empty_report = [&](const char* name) {
      HypothesisReport r;
      r.inequality = name;
      r.grid.assign(cfg.grid.begin(), cfg.grid.end());
      r.sample_x = xs.size();
      r.sample_y = ys.size();
      r.exclude_diagonal = samples.exclude_diagonal;
      return r;
    };

    if (cfg.scheme == Scheme::pair) {
      const auto& p = std::get<MapPair>(*cfg.problem);
      try {
        reports.push_back(estimate_k_pair(p, *cfg.mu, *cfg.nu, samples, eo));
      } catch (const EmptySampleError& e) {
        reports.push_back(empty_report("pair"));
        err << "pair: " << e.what() << '\n';
      }
      if (!ys.empty()) {
        try {
          reports.push_back(estimate_k_pair_dual(p, *cfg.mu, *cfg.nu, samples, eo));
        } catch (const EmptySampleError& e) {
          reports.push_back(empty_report("pair-dual"));
          err << "pair-dual: " << e.what() << '\n';
        }
      }
    } else {
      const auto& q = std::get<MapQuadruple>(*cfg.problem);
      try {
        auto [a, b] = cfg.scheme == Scheme::quadruple ? estimate_k_quad(q, *cfg.mu, *cfg.nu, samples, eo)
                                                      : estimate_k_self_quad(q, *cfg.mu, samples, eo);
        reports.push_back(std::move(a));
        reports.push_back(std::move(b));
      } catch (const EmptySampleError& e) {
        const bool quad = cfg.scheme == Scheme::quadruple;
        reports.push_back(empty_report(quad ? "quad-x" : "self-quad-x"));
        reports.push_back(empty_report(quad ? "quad-y" : "self-quad-y"));
        err << "hypotheses: " << e.what() << '\n';
      }
    }

    bool any = false, all_hold = true;
    json rj = json::array();
    for (const auto& r : reports) {
      rj.push_back(to_json(r));
      if (r.evaluated > 0) {
        any = true;
        all_hold = all_hold && r.holds();
      }
      log << r.inequality << ": k_hat = " << (r.evaluated > 0 ? fmt(r.k_hat) : "n/a") << " over " << r.evaluated
          << " tuples, " << r.skipped << " skipped";
      for (const auto& [why, n] : r.skip_reasons) log << " (" << why << ": " << n << ")";
      log << '\n';
      if (r.witness) {
        const auto& w = *r.witness;
        log << "  witness:";
        for (std::size_t i = 0; i < w.labels.size() && i < w.points.size(); ++i) {
          log << ' ' << w.labels[i] << '=' << w.points[i].to_string();
        }
        log << " t=" << format_number(w.t) << " ratio=" << fmt(w.ratio) << '\n';
      }
    }
    const bool pass = any && all_hold;
    log << "grid: " << cfg.grid.size() << " points on [" << format_number(cfg.grid.front()) << ", "
        << format_number(cfg.grid.back()) << "] (" << cfg.grid_source << ")\n";

    json doc = header("hypotheses", cfg);
    doc["scheme"] = std::string(to_string(cfg.scheme));
    json sx = json::array(), sy = json::array();
    for (const auto& p : xs) sx.push_back(point_json(p));
    for (const auto& p : ys) sy.push_back(point_json(p));
    doc["sample"] = {{"seed", h.seed}, {"points_x", sx}, {"points_y", sy}, {"points_y_source", y_source},
                     {"random_x", h.random_x}, {"random_y", h.random_y},
                     {"exclude_diagonal", samples.exclude_diagonal}};
    doc["reports"] = rj;
    doc["pass"] = pass;
    write_json(options.out / "hypotheses.json", doc);
    log << (pass ? "PASS" : "FAIL") << ": sampled contraction constant " << (pass ? "below" : "not below") << " 1\n";
    return pass ? kExitOk : kExitFailed;
  });
}

int cmd_solve(const CommandOptions& options, std::ostream& log, std::ostream& err) {
  return run_command(options, err, [&](RunConfig& cfg) {
    require(cfg.problem.has_value(), "solve needs a maps section");
    require(cfg.x0.has_value(), "solve needs a starting point (solve/x0)");
    const FixedPointResult r = solve(*cfg.problem, *cfg.mu, *cfg.nu, *cfg.x0, cfg.solve);
    std::optional<UniquenessReport> probe;
    if (cfg.starts.size() >= 2) probe = uniqueness_probe(*cfg.problem, *cfg.mu, *cfg.nu, cfg.starts, cfg.solve);

    const bool ok = r.status == SolveStatus::converged && r.conclusions.pass && (!probe || probe->unique);
    log << "status: " << to_string(r.status) << " after " << r.iterations << " iterations";
    if (!r.reason.empty()) log << " (" << r.reason << ")";
    log << "\nz = " << r.z.to_string() << "\nw = " << r.w.to_string() << '\n';
    for (const auto& res : r.conclusions.residuals) log << "  " << res.name << ": " << fmt(res.value) << '\n';
    if (probe) {
      log << "uniqueness: " << (probe->unique ? "unique" : probe->conclusive ? "not unique" : "inconclusive")
          << " (spread z " << fmt(probe->max_distance_z) << ", w " << fmt(probe->max_distance_w) << ")\n";
    }

    if (want_json(options.format)) {
      json doc = header("solve", cfg);
      doc["scheme"] = std::string(to_string(cfg.scheme));
      doc["solve_config"] = to_json(cfg.solve);
      doc["x0"] = point_json(*cfg.x0);
      doc["status"] = std::string(to_string(r.status));
      doc["reason"] = r.reason;
      doc["iterations"] = r.iterations;
      doc["z"] = point_json(r.z);
      doc["w"] = point_json(r.w);
      doc["trace"] = {{"x_points", r.trace_x.size()}, {"y_points", r.trace_y.size()},
                      {"file", want_csv(options.format) ? json("trace.csv") : json(nullptr)}};
      doc["conclusions"] = to_json(r.conclusions);
      doc["uniqueness"] = probe ? to_json(*probe) : json(nullptr);
      doc["pass"] = ok;
      write_json(options.out / "solve_summary.json", doc);
    }
    if (want_csv(options.format)) {
      write_file(options.out / "trace.csv", [&](std::ostream& out) { write_trace_csv(out, r); });
    }
    log << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailed;
  });
}

int cmd_suite(const CommandOptions& options, std::ostream& log, std::ostream& err) {
  return run_command(options, err, [&](RunConfig& cfg) {
    const auto specs = cfg.suite.expand();
    const SuiteVerdict v = run_suite(specs, cfg.solve, cfg.suite.options);

    log << "instances: " << v.instances << ", passed " << v.passed << ", converged " << v.converged << ", diverging "
        << v.diverging << ", max-iter " << v.max_iter << ", conclusions " << v.conclusions_pass << ", unique "
        << v.unique << ", k_hat < 1 " << v.hypothesis_holds << ", axiom-clean " << v.axiom_clean << ", errors "
        << v.errors << '\n';
    for (const auto& row : v.rows) {
      if (row.passed) continue;
      log << "  instance " << row.index << " (seed " << row.seed << "): " << to_string(row.status);
      if (!row.error.empty()) log << ", " << row.error;
      log << '\n';
    }

    if (want_json(options.format)) {
      json doc = header("suite", cfg);
      doc["seed"] = cfg.suite.seed;
      json groups = json::array();
      for (std::size_t g = 0; g < cfg.suite.groups.size(); ++g) {
        json j = to_json(cfg.suite.groups[g]);
        j.erase("seed");
        j["count"] = cfg.suite.group_counts[g];
        groups.push_back(j);
      }
      doc["groups"] = groups;
      doc["options"] = to_json(cfg.suite.options);
      doc["solve_config"] = to_json(cfg.solve);
      doc["counts"] = counts_json(v);
      json rows = json::array();
      for (const auto& row : v.rows) rows.push_back(to_json(row));
      doc["rows"] = rows;
      doc["pass"] = v.all_passed();
      write_json(options.out / "verdict.json", doc);
    }
    if (want_csv(options.format)) {
      write_file(options.out / "verdict.csv", [&](std::ostream& out) { write_verdict_csv(out, v); });
    }
    log << (v.all_passed() ? "PASS" : "FAIL") << '\n';
    return v.all_passed() ? kExitOk : kExitFailed;
  });
}

}  // namespace fuzzyfp::cli
