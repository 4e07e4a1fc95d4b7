#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "fuzzyfp/rng.hpp"

namespace fuzzyfp::cli {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json point_json(const Point& p) {
  if (p.is_index()) return p.index();
  json a = json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

json grid_json(const TGrid& grid) { return std::vector<double>(grid.begin(), grid.end()); }

json generator_json() {
  return {{"name", Rng::kName}, {"real", Rng::kRealRule}, {"index", "next() % n"}};
}

json to_json(const AxiomViolation& v) {
  json pts = json::array();
  for (const auto& p : v.points) pts.push_back(point_json(p));
  return {{"axiom", v.axiom}, {"values", v.values}, {"points", pts}, {"magnitude", number_json(v.magnitude)}};
}

json to_json(const AxiomReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return {{"subject", r.subject},
          {"seed", r.seed},
          {"samples", r.sample_count},
          {"grid", r.grid},
          {"counts", r.counts},
          {"total", r.total()},
          {"ok", r.ok()},
          {"violations", violations},
          {"notes", r.notes}};
}

json to_json(const HypothesisReport& r) {
  json j{{"inequality", r.inequality},
         {"k_hat", r.evaluated > 0 ? number_json(r.k_hat) : json(nullptr)},
         {"holds", r.holds()},
         {"evaluated", r.evaluated},
         {"skipped", r.skipped},
         {"skip_reasons", r.skip_reasons},
         {"sample_x", r.sample_x},
         {"sample_y", r.sample_y},
         {"exclude_diagonal", r.exclude_diagonal},
         {"grid", r.grid}};
  if (r.witness) {
    const auto& w = *r.witness;
    json pts = json::object();
    for (std::size_t i = 0; i < w.labels.size() && i < w.points.size(); ++i) pts[w.labels[i]] = point_json(w.points[i]);
    j["witness"] = {{"points", pts},
                    {"t", w.t},
                    {"lhs", number_json(w.lhs)},
                    {"rhs", number_json(w.rhs)},
                    {"ratio", number_json(w.ratio)}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.ratios.empty()) {
    json rows = json::array();
    for (const auto& row : r.ratios) rows.push_back({{"indices", row.indices}, {"t", row.t}, {"ratio", number_json(row.ratio)}});
    j["ratios"] = rows;
  }
  return j;
}

json to_json(const ConclusionReport& r) {
  json res = json::array();
  for (const auto& x : r.residuals) res.push_back({{"relation", x.name}, {"residual", number_json(x.value)}});
  return {{"residuals", res}, {"tol", r.tol}, {"min_residual", number_json(r.min_residual())}, {"pass", r.pass}};
}

json to_json(const UniquenessReport& r) {
  json z = json::array(), w = json::array(), st = json::array();
  for (const auto& p : r.z) z.push_back(point_json(p));
  for (const auto& p : r.w) w.push_back(point_json(p));
  for (auto s : r.status) st.push_back(std::string(to_string(s)));
  return {{"z", z},
          {"w", w},
          {"status", st},
          {"max_distance_z", number_json(r.max_distance_z)},
          {"max_distance_w", number_json(r.max_distance_w)},
          {"tol", r.tol},
          {"conclusive", r.conclusive},
          {"unique", r.unique}};
}

json to_json(const SolveConfig& c) {
  return {{"eps", c.eps},
          {"max_iter", c.max_iter},
          {"stall_window", c.stall_window},
          {"p_max", c.p_max},
          {"verify_tol", c.verify_tol},
          {"point_tol", c.point_tol},
          {"uniqueness_tol", c.uniqueness_tol},
          {"grid", grid_json(c.grid)}};
}

json to_json(const InstanceSpec& s) {
  return {{"scheme", std::string(to_string(s.scheme))},
          {"dim", s.dim},
          {"family", std::string(to_string(s.family))},
          {"factor_lo", s.factor_lo},
          {"factor_hi", s.factor_hi},
          {"metric", std::string(to_string(s.metric))},
          {"crisp", std::string(to_string(s.crisp))},
          {"half_width", s.half_width},
          {"expansive", s.expansive},
          {"seed", s.seed},
          {"grid", grid_json(s.grid)}};
}

json to_json(const SuiteOptions& o) {
  return {{"trajectory_samples", o.trajectory_samples},
          {"random_samples", o.random_samples},
          {"axiom_triples", o.axiom_triples},
          {"uniqueness_starts", o.uniqueness_starts},
          {"vacuity_scales", o.vacuity_scales},
          {"tnorm", std::string(to_string(o.tnorm.kind()))}};
}

json to_json(const VerdictRow& r) {
  json k = json::array();
  for (double v : r.k_hat) k.push_back(number_json(v));
  return {{"index", r.index},
          {"seed", r.seed},
          {"scheme", std::string(to_string(r.scheme))},
          {"family", std::string(to_string(r.family))},
          {"dim", r.dim},
          {"expansive", r.expansive},
          {"factors", r.factors},
          {"axiom_violations", r.axiom_violations},
          {"k_hat", k},
          {"grid_t_max", r.grid_t_max},
          {"hypothesis_holds", r.hypothesis_holds},
          {"status", std::string(to_string(r.status))},
          {"iterations", r.iterations},
          {"z", point_json(r.z)},
          {"w", point_json(r.w)},
          {"min_residual", number_json(r.min_residual)},
          {"conclusions_pass", r.conclusions_pass},
          {"uniqueness_conclusive", r.uniqueness_conclusive},
          {"unique", r.unique},
          {"uniqueness_spread", number_json(r.uniqueness_spread)},
          {"passed", r.passed},
          {"error", r.error}};
}

json counts_json(const SuiteVerdict& v) {
  return {{"instances", v.instances},
          {"passed", v.passed},
          {"converged", v.converged},
          {"diverging", v.diverging},
          {"max_iter", v.max_iter},
          {"conclusions_pass", v.conclusions_pass},
          {"unique", v.unique},
          {"hypothesis_holds", v.hypothesis_holds},
          {"axiom_clean", v.axiom_clean},
          {"errors", v.errors}};
}

namespace {

std::size_t width(const SequenceTrace& t) {
  if (t.points.empty()) return 0;
  return t.points.front().is_index() ? 1 : t.points.front().dim();
}

void put_point(std::ostream& out, const SequenceTrace& trace, std::size_t n, std::size_t w) {
  const bool present = !trace.empty() && n >= trace.first_index && n <= trace.last_index();
  for (std::size_t i = 0; i < w; ++i) {
    out << ',';
    if (!present) continue;
    const Point& p = trace.at(n);
    out << (p.is_index() ? std::to_string(p.index()) : format_number(p[i]));
  }
}

void put_step(std::ostream& out, const SequenceTrace& trace, std::size_t n, std::size_t k) {
  out << ',';
  if (trace.empty() || n < trace.first_index) return;
  const std::size_t i = n - trace.first_index;
  if (i < trace.step_nearness.size()) out << format_number(trace.step_nearness[i][k]);
}

std::string coords_label(const SequenceTrace& t, const char* name) {
  const std::size_t w = width(t);
  if (w == 0) return "";
  if (!t.points.empty() && t.points.front().is_index()) return std::string(",") + name + "_index";
  std::string s;
  for (std::size_t i = 0; i < w; ++i) s += "," + std::string(name) + "_" + std::to_string(i + 1);
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_number(v[i]);
  return s;
}

std::string point_cell(const Point& p) {
  if (p.is_index()) return std::to_string(p.index());
  return join(std::vector<double>(p.coords().begin(), p.coords().end()));
}

}  // namespace

void write_trace_csv(std::ostream& out, const FixedPointResult& r) {
  const auto& tx = r.trace_x;
  const auto& ty = r.trace_y;
  const std::size_t wx = width(tx), wy = width(ty);
  out << "n,t,mu_step_x,nu_step_y" << coords_label(tx, "x") << coords_label(ty, "y") << '\n';
  if (tx.empty()) return;
  const TGrid& grid = tx.grid;
  std::size_t last = tx.last_index();
  if (!ty.empty()) last = std::max(last, ty.last_index());
  for (std::size_t n = tx.first_index; n <= last; ++n) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      out << n << ',' << format_number(grid[k]);
      put_step(out, tx, n, k);
      put_step(out, ty, n, k);
      put_point(out, tx, n, wx);
      put_point(out, ty, n, wy);
      out << '\n';
    }
  }
}

void write_verdict_csv(std::ostream& out, const SuiteVerdict& v) {
  out << "index,seed,scheme,family,dim,expansive,factors,axiom_violations,k_hat,grid_t_max,hypothesis_holds,status,"
         "iterations,z,w,min_residual,conclusions_pass,uniqueness_conclusive,unique,uniqueness_spread,passed,error\n";
  for (const auto& r : v.rows) {
    std::string err = r.error;
    for (char& c : err) {
      if (c == '"' || c == '\n' || c == ',') c = ' ';
    }
    out << r.index << ',' << r.seed << ',' << to_string(r.scheme) << ',' << to_string(r.family) << ',' << r.dim << ','
        << (r.expansive ? "true" : "false") << ',' << join(r.factors) << ',' << r.axiom_violations << ','
        << join(r.k_hat) << ',' << join(r.grid_t_max) << ',' << (r.hypothesis_holds ? "true" : "false") << ','
        << to_string(r.status) << ',' << r.iterations << ',' << point_cell(r.z) << ',' << point_cell(r.w) << ','
        << format_number(r.min_residual) << ',' << (r.conclusions_pass ? "true" : "false") << ','
        << (r.uniqueness_conclusive ? "true" : "false") << ',' << (r.unique ? "true" : "false") << ','
        << format_number(r.uniqueness_spread) << ',' << (r.passed ? "true" : "false") << ',' << err << '\n';
  }
}

}  // namespace fuzzyfp::cli
