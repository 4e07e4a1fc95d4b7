#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/mapping.hpp"
#include "report.hpp"

namespace fuzzyfp::cli {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

void require_object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> keys;
  for (const char* k : allowed) keys.insert(k);
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!keys.contains(k)) fail(child(where, k), "unknown key");
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

std::uint64_t unsigned_int(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(where, "expected a non-negative integer");
}

std::size_t size_value(const json& j, const std::string& where) {
  return static_cast<std::size_t>(unsigned_int(j, where));
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

std::string string_value(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<double> number_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], child(where, i)));
  return out;
}

// Box bound: number or null (unbounded).
std::vector<double> bound_list(const json& j, const std::string& where, double missing) {
  if (!j.is_array()) fail(where, "expected an array of numbers or nulls");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(j[i].is_null() ? missing : number(j[i], child(where, i)));
  }
  return out;
}

template <typename F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

CrispMetric parse_crisp(const std::string& name, const std::string& where) {
  if (name == "euclidean") return CrispMetric::euclidean;
  if (name == "max") return CrispMetric::max;
  fail(where, "unknown crisp metric '" + name + "' (expected euclidean or max)");
}

FuzzyMetricForm parse_form(const std::string& name, const std::string& where) {
  if (name == "standard" || name == "induced_standard") return FuzzyMetricForm::induced_standard;
  if (name == "exponential" || name == "induced_exponential") return FuzzyMetricForm::induced_exponential;
  if (name == "table") return FuzzyMetricForm::table;
  fail(where, "unknown metric form '" + name + "'");
}

TGrid parse_grid(const json& j, const std::string& where) {
  require_object(j, where, {"lo", "hi", "points", "values"});
  if (j.contains("values")) {
    if (j.contains("lo") || j.contains("hi") || j.contains("points")) fail(where, "give either values or lo/hi/points");
    const auto values = number_list(j["values"], child(where, "values"));
    return guarded(where, [&] { return TGrid(values); });
  }
  const double lo = j.contains("lo") ? number(j["lo"], child(where, "lo")) : TGrid::kDefaultLo;
  const double hi = j.contains("hi") ? number(j["hi"], child(where, "hi")) : TGrid::kDefaultHi;
  const std::size_t n = j.contains("points") ? size_value(j["points"], child(where, "points")) : TGrid::kDefaultPoints;
  if (n < 1) fail(child(where, "points"), "must be at least 1");
  if (n > 1 && !(lo < hi)) fail(where, "lo must be below hi");
  return guarded(where, [&] { return TGrid::log_spaced(lo, hi, n); });
}

CarrierSpace parse_carrier(const json& j, const std::string& where) {
  require_object(j, where, {"kind", "dim", "lo", "hi", "metric", "table"});
  const std::string kind = j.contains("kind") ? string_value(j["kind"], child(where, "kind")) : "box";
  if (kind == "finite") {
    for (const char* k : {"dim", "lo", "hi", "metric"}) {
      if (j.contains(k)) fail(child(where, k), "not allowed for a finite carrier");
    }
    if (!j.contains("table")) fail(where, "finite carrier needs a distance table");
    const json& t = j["table"];
    if (!t.is_array()) fail(child(where, "table"), "expected an array of rows");
    std::vector<std::vector<double>> table;
    for (std::size_t i = 0; i < t.size(); ++i) table.push_back(number_list(t[i], child(child(where, "table"), i)));
    return guarded(where, [&] { return CarrierSpace::finite(table); });
  }
  if (kind != "box") fail(child(where, "kind"), "expected box or finite");
  if (j.contains("table")) fail(child(where, "table"), "not allowed for a box carrier");
  const CrispMetric metric =
      j.contains("metric") ? parse_crisp(string_value(j["metric"], child(where, "metric")), child(where, "metric"))
                           : CrispMetric::euclidean;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!j.contains("lo") && !j.contains("hi")) {
    if (!j.contains("dim")) fail(where, "box carrier needs dim or lo/hi");
    const std::size_t dim = size_value(j["dim"], child(where, "dim"));
    if (dim < 1) fail(child(where, "dim"), "must be at least 1");
    return CarrierSpace::unbounded(dim, metric);
  }
  if (!j.contains("lo") || !j.contains("hi")) fail(where, "box carrier needs both lo and hi");
  auto lo = bound_list(j["lo"], child(where, "lo"), -inf);
  auto hi = bound_list(j["hi"], child(where, "hi"), inf);
  if (lo.size() != hi.size() || lo.empty()) fail(where, "lo and hi must be non-empty and of equal length");
  if (j.contains("dim") && size_value(j["dim"], child(where, "dim")) != lo.size()) {
    fail(child(where, "dim"), "does not match the length of lo/hi");
  }
  return guarded(where, [&] { return CarrierSpace::box(lo, hi, metric); });
}

// A point of `carrier`: an index for finite carriers, an array (or a bare
// number in one dimension) for boxes.
Point parse_point(const json& j, const CarrierSpace& carrier, const std::string& where) {
  Point p;
  if (carrier.kind() == CarrierKind::finite) {
    p = Point::at_index(size_value(j, where));
  } else if (j.is_number()) {
    p = guarded(where, [&] { return Point{number(j, where)}; });
  } else {
    const auto coords = number_list(j, where);
    p = guarded(where, [&] { return Point(coords); });
  }
  if (!carrier.contains(p)) fail(where, "point " + p.to_string() + " is not in the carrier");
  return p;
}

std::vector<Point> parse_points(const json& j, const CarrierSpace& carrier, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_point(j[i], carrier, child(where, i)));
  return out;
}

FuzzyMetric parse_metric(const json& j, const CarrierSpace& carrier, const TGrid& default_grid,
                         const std::string& where) {
  require_object(j, where, {"form", "grid", "values"});
  const FuzzyMetricForm form = j.contains("form")
                                   ? parse_form(string_value(j["form"], child(where, "form")), child(where, "form"))
                                   : FuzzyMetricForm::induced_standard;
  if (form != FuzzyMetricForm::table) {
    if (j.contains("grid") || j.contains("values")) fail(where, "grid/values only apply to the table form");
    return form == FuzzyMetricForm::induced_standard ? induced_standard(carrier) : induced_exponential(carrier);
  }
  if (carrier.kind() != CarrierKind::finite) fail(where, "table form needs a finite carrier");
  const TGrid grid = j.contains("grid") ? parse_grid(j["grid"], child(where, "grid")) : default_grid;
  if (!j.contains("values")) fail(where, "table form needs values");
  const json& v = j["values"];
  const std::string vw = child(where, "values");
  if (!v.is_array()) fail(vw, "expected values[i][j][k]");
  std::vector<std::vector<std::vector<double>>> values;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (!v[a].is_array()) fail(child(vw, a), "expected an array");
    auto& row = values.emplace_back();
    for (std::size_t b = 0; b < v[a].size(); ++b) row.push_back(number_list(v[a][b], child(child(vw, a), b)));
  }
  return guarded(where, [&] { return table_metric(carrier, grid, values); });
}

Mapping parse_mapping(const json& j, const CarrierSpace& from, const CarrierSpace& to, const std::string& where) {
  require_object(j, where, {"form", "matrix", "offset", "value", "targets", "parts"});
  if (!j.contains("form")) fail(where, "mapping needs a form");
  const std::string form = string_value(j["form"], child(where, "form"));
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : j.items()) {
      (void)v;
      if (k == "form") continue;
      bool ok = false;
      for (const char* a : keys) ok = ok || k == a;
      if (!ok) fail(child(where, k), "not used by form '" + form + "'");
    }
  };
  if (form == "affine") {
    only({"matrix", "offset"});
    if (from.kind() != CarrierKind::box || to.kind() != CarrierKind::box) fail(where, "affine maps need box carriers");
    const std::size_t rows = to.dim();
    const std::size_t cols = from.dim();
    std::vector<double> m;
    if (!j.contains("matrix")) fail(where, "affine map needs a matrix");
    const json& mj = j["matrix"];
    if (mj.is_number() && rows == 1 && cols == 1) {
      m.push_back(number(mj, child(where, "matrix")));
    } else {
      if (!mj.is_array() || mj.size() != rows) fail(child(where, "matrix"), "expected " + std::to_string(rows) + " rows");
      for (std::size_t r = 0; r < rows; ++r) {
        const auto row = number_list(mj[r], child(child(where, "matrix"), r));
        if (row.size() != cols) fail(child(child(where, "matrix"), r), "expected " + std::to_string(cols) + " columns");
        m.insert(m.end(), row.begin(), row.end());
      }
    }
    std::vector<double> b(rows, 0.0);
    if (j.contains("offset")) {
      const json& oj = j["offset"];
      if (oj.is_number() && rows == 1) {
        b[0] = number(oj, child(where, "offset"));
      } else {
        b = number_list(oj, child(where, "offset"));
        if (b.size() != rows) fail(child(where, "offset"), "expected " + std::to_string(rows) + " entries");
      }
    }
    return guarded(where, [&] { return Mapping::affine(rows, cols, m, b); });
  }
  if (form == "identity") {
    only({});
    if (from.kind() != to.kind() || from.dim() != to.dim()) fail(where, "identity needs matching carriers");
    if (from.kind() == CarrierKind::finite) {
      std::vector<std::size_t> targets(from.size());
      for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = i;
      return Mapping::table(targets);
    }
    return Mapping::identity(from.dim());
  }
  if (form == "constant") {
    only({"value"});
    if (!j.contains("value")) fail(where, "constant map needs a value");
    return Mapping::constant(parse_point(j["value"], to, child(where, "value")));
  }
  if (form == "table") {
    only({"targets"});
    if (from.kind() != CarrierKind::finite || to.kind() != CarrierKind::finite) {
      fail(where, "table maps need finite carriers");
    }
    if (!j.contains("targets") || !j["targets"].is_array()) fail(where, "table map needs a targets array");
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < j["targets"].size(); ++i) {
      const std::size_t t = size_value(j["targets"][i], child(child(where, "targets"), i));
      if (t >= to.size()) fail(child(child(where, "targets"), i), "target outside the codomain");
      targets.push_back(t);
    }
    if (targets.size() != from.size()) fail(child(where, "targets"), "expected one target per domain element");
    return Mapping::table(targets);
  }
  if (form == "composed") {
    only({"parts"});
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
      fail(where, "composed map needs a non-empty parts array");
    }
    // Intermediate spaces are taken to be the domain; the last part maps into the codomain.
    std::vector<Mapping> parts;
    const json& pj = j["parts"];
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const bool last = i + 1 == pj.size();
      parts.push_back(parse_mapping(pj[i], from, last ? to : from, child(child(where, "parts"), i)));
    }
    return guarded(where, [&] { return Mapping::composed(parts); });
  }
  fail(child(where, "form"), "unknown mapping form '" + form + "'");
}

void parse_solve(const json& j, RunConfig& cfg) {
  const std::string where = "/solve";
  require_object(j, where,
                 {"eps", "max_iter", "stall_window", "p_max", "verify_tol", "point_tol", "uniqueness_tol", "x0",
                  "starts"});
  SolveConfig& s = cfg.solve;
  if (j.contains("eps")) s.eps = number(j["eps"], where + "/eps");
  if (j.contains("max_iter")) s.max_iter = size_value(j["max_iter"], where + "/max_iter");
  if (j.contains("stall_window")) s.stall_window = size_value(j["stall_window"], where + "/stall_window");
  if (j.contains("p_max")) s.p_max = size_value(j["p_max"], where + "/p_max");
  if (j.contains("verify_tol")) s.verify_tol = number(j["verify_tol"], where + "/verify_tol");
  if (j.contains("point_tol")) s.point_tol = number(j["point_tol"], where + "/point_tol");
  if (j.contains("uniqueness_tol")) s.uniqueness_tol = number(j["uniqueness_tol"], where + "/uniqueness_tol");
  guarded(where, [&] { s.validate(); });
  if (j.contains("x0") || j.contains("starts")) {
    if (!cfg.carrier_x) fail(where, "x0/starts need a carrier section");
    if (j.contains("x0")) cfg.x0 = parse_point(j["x0"], *cfg.carrier_x, where + "/x0");
    if (j.contains("starts")) cfg.starts = parse_points(j["starts"], *cfg.carrier_x, where + "/starts");
  }
}

void parse_axioms(const json& j, AxiomSettings& a) {
  const std::string where = "/axioms";
  require_object(j, where, {"tnorm_samples", "triples", "seed", "tnorms"});
  if (j.contains("tnorm_samples")) a.tnorm_samples = size_value(j["tnorm_samples"], where + "/tnorm_samples");
  if (j.contains("triples")) a.triples = size_value(j["triples"], where + "/triples");
  if (j.contains("seed")) a.seed = unsigned_int(j["seed"], where + "/seed");
  if (a.tnorm_samples < 1) fail(where + "/tnorm_samples", "must be at least 1");
  if (a.triples < 1) fail(where + "/triples", "must be at least 1");
  if (j.contains("tnorms")) {
    const json& t = j["tnorms"];
    if (!t.is_array() || t.empty()) fail(where + "/tnorms", "expected a non-empty array of names");
    a.tnorms.clear();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string w = child(where + "/tnorms", i);
      a.tnorms.push_back(guarded(w, [&] { return parse_tnorm(string_value(t[i], w)); }));
    }
  }
}

void parse_hypotheses(const json& j, RunConfig& cfg) {
  const std::string where = "/hypotheses";
  require_object(j, where, {"points_x", "points_y", "random_x", "random_y", "seed", "exclude_diagonal", "dump_ratios"});
  HypothesisSettings& h = cfg.hypotheses;
  if (j.contains("points_x") || j.contains("random_x")) {
    if (!cfg.carrier_x) fail(where, "sample points need a carrier section");
  }
  if (j.contains("points_x")) h.points_x = parse_points(j["points_x"], *cfg.carrier_x, where + "/points_x");
  if (j.contains("points_y")) {
    if (!cfg.carrier_y) fail(where, "sample points need a carrier section");
    h.points_y = parse_points(j["points_y"], *cfg.carrier_y, where + "/points_y");
  }
  if (j.contains("random_x")) h.random_x = size_value(j["random_x"], where + "/random_x");
  if (j.contains("random_y")) h.random_y = size_value(j["random_y"], where + "/random_y");
  if (j.contains("seed")) h.seed = unsigned_int(j["seed"], where + "/seed");
  if (j.contains("exclude_diagonal")) h.exclude_diagonal = boolean(j["exclude_diagonal"], where + "/exclude_diagonal");
  if (j.contains("dump_ratios")) h.dump_ratios = boolean(j["dump_ratios"], where + "/dump_ratios");
}

void parse_suite(const json& j, RunConfig& cfg) {
  const std::string where = "/suite";
  require_object(j, where,
                 {"seed", "workers", "groups", "trajectory_samples", "random_samples", "axiom_triples",
                  "uniqueness_starts", "vacuity_scales", "tnorm"});
  SuiteSettings& s = cfg.suite;
  if (j.contains("seed")) s.seed = unsigned_int(j["seed"], where + "/seed");
  SuiteOptions& o = s.options;
  if (j.contains("workers")) o.workers = size_value(j["workers"], where + "/workers");
  if (j.contains("trajectory_samples")) {
    o.trajectory_samples = size_value(j["trajectory_samples"], where + "/trajectory_samples");
  }
  if (j.contains("random_samples")) o.random_samples = size_value(j["random_samples"], where + "/random_samples");
  if (j.contains("axiom_triples")) o.axiom_triples = size_value(j["axiom_triples"], where + "/axiom_triples");
  if (j.contains("uniqueness_starts")) {
    o.uniqueness_starts = size_value(j["uniqueness_starts"], where + "/uniqueness_starts");
  }
  if (j.contains("vacuity_scales")) {
    o.vacuity_scales = number_list(j["vacuity_scales"], where + "/vacuity_scales");
    for (double v : o.vacuity_scales) {
      if (!(v > 1.0)) fail(where + "/vacuity_scales", "scales must exceed 1");
    }
  }
  if (j.contains("tnorm")) {
    o.tnorm = TNorm(guarded(where + "/tnorm", [&] { return parse_tnorm(string_value(j["tnorm"], where + "/tnorm")); }));
  }
  if (o.workers < 1) fail(where + "/workers", "must be at least 1");
  if (o.trajectory_samples + o.random_samples < 2) fail(where, "need at least two hypothesis sample points");
  if (o.uniqueness_starts < 2) fail(where + "/uniqueness_starts", "must be at least 2");
  if (o.axiom_triples < 1) fail(where + "/axiom_triples", "must be at least 1");

  if (!j.contains("groups")) return;
  const json& g = j["groups"];
  if (!g.is_array() || g.empty()) fail(where + "/groups", "expected a non-empty array");
  s.groups.clear();
  s.group_counts.clear();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string w = child(where + "/groups", i);
    const json& e = g[i];
    require_object(e, w,
                   {"scheme", "dim", "family", "factor_lo", "factor_hi", "metric", "crisp", "count", "expansive",
                    "half_width"});
    InstanceSpec spec;
    if (e.contains("scheme")) {
      spec.scheme = guarded(w + "/scheme", [&] { return parse_scheme(string_value(e["scheme"], w + "/scheme")); });
    }
    if (e.contains("family")) {
      spec.family = guarded(w + "/family", [&] { return parse_family(string_value(e["family"], w + "/family")); });
    }
    if (e.contains("dim")) spec.dim = size_value(e["dim"], w + "/dim");
    if (e.contains("expansive")) spec.expansive = boolean(e["expansive"], w + "/expansive");
    if (spec.expansive) {
      spec.factor_lo = 1.1;
      spec.factor_hi = 2.0;
    }
    if (e.contains("factor_lo")) spec.factor_lo = number(e["factor_lo"], w + "/factor_lo");
    if (e.contains("factor_hi")) spec.factor_hi = number(e["factor_hi"], w + "/factor_hi");
    if (e.contains("metric")) spec.metric = parse_form(string_value(e["metric"], w + "/metric"), w + "/metric");
    if (e.contains("crisp")) spec.crisp = parse_crisp(string_value(e["crisp"], w + "/crisp"), w + "/crisp");
    if (e.contains("half_width")) spec.half_width = number(e["half_width"], w + "/half_width");
    spec.grid = cfg.grid;
    const std::size_t count = e.contains("count") ? size_value(e["count"], w + "/count") : 1;
    if (count < 1) fail(w + "/count", "must be at least 1");
    guarded(w, [&] { spec.validate(); });
    s.groups.push_back(spec);
    s.group_counts.push_back(count);
  }
}

}  // namespace

std::vector<InstanceSpec> SuiteSettings::expand() const {
  std::vector<InstanceSpec> out;
  std::uint64_t next = seed;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    InstanceSpec base = groups[g];
    base.seed = next;
    auto part = expand_specs(base, group_counts[g]);
    out.insert(out.end(), part.begin(), part.end());
    next += group_counts[g];
  }
  return out;
}

RunConfig parse_config(const json& doc) {
  require_object(doc, "", {"carrier", "metric", "maps", "grid", "solve", "suite", "axioms", "hypotheses"});
  RunConfig cfg;

  if (doc.contains("grid")) {
    cfg.grid = parse_grid(doc["grid"], "/grid");
    cfg.grid_source = "config";
  }
  cfg.solve.grid = cfg.grid;

  if (doc.contains("carrier")) {
    const json& c = doc["carrier"];
    require_object(c, "/carrier", {"X", "Y"});
    if (!c.contains("X")) fail("/carrier", "missing X");
    cfg.carrier_x = parse_carrier(c["X"], "/carrier/X");
    cfg.carrier_y = c.contains("Y") ? parse_carrier(c["Y"], "/carrier/Y") : *cfg.carrier_x;
    cfg.separate_y = c.contains("Y");
  }

  if (doc.contains("metric")) {
    const json& m = doc["metric"];
    require_object(m, "/metric", {"tnorm", "X", "Y"});
    if (!cfg.carrier_x) fail("/metric", "needs a carrier section");
    if (m.contains("tnorm")) {
      cfg.tnorm = TNorm(guarded("/metric/tnorm", [&] { return parse_tnorm(string_value(m["tnorm"], "/metric/tnorm")); }));
    }
    const json empty = json::object();
    const json& mx = m.contains("X") ? m["X"] : empty;
    cfg.mu = parse_metric(mx, *cfg.carrier_x, cfg.grid, "/metric/X");
    cfg.separate_y = cfg.separate_y || m.contains("Y");
    cfg.nu = m.contains("Y") ? parse_metric(m["Y"], *cfg.carrier_y, cfg.grid, "/metric/Y")
                             : parse_metric(mx, *cfg.carrier_y, cfg.grid, "/metric/X");
  } else if (cfg.carrier_x) {
    cfg.mu = induced_standard(*cfg.carrier_x);
    cfg.nu = induced_standard(*cfg.carrier_y);
  }

  if (doc.contains("maps")) {
    const json& m = doc["maps"];
    require_object(m, "/maps", {"scheme", "T", "S", "A", "B"});
    if (!cfg.carrier_x) fail("/maps", "needs a carrier section");
    const std::string scheme = m.contains("scheme") ? string_value(m["scheme"], "/maps/scheme") : "pair";
    cfg.scheme = guarded("/maps/scheme", [&] { return parse_scheme(scheme); });
    const CarrierSpace& X = *cfg.carrier_x;
    const CarrierSpace& Y = *cfg.carrier_y;
    auto need = [&](const char* k) -> const json& {
      if (!m.contains(k)) fail("/maps", std::string("missing map ") + k);
      return m[k];
    };
    if (cfg.scheme == Scheme::pair) {
      for (const char* k : {"A", "B"}) {
        if (m.contains(k)) fail(std::string("/maps/") + k, "not used by the pair scheme");
      }
      cfg.problem = MapPair{parse_mapping(need("T"), X, Y, "/maps/T"), parse_mapping(need("S"), Y, X, "/maps/S")};
    } else {
      if (cfg.scheme == Scheme::self_quadruple && doc["carrier"].contains("Y")) {
        fail("/carrier/Y", "the self-quadruple scheme uses the single space X");
      }
      cfg.problem = MapQuadruple{parse_mapping(need("A"), X, Y, "/maps/A"), parse_mapping(need("B"), X, Y, "/maps/B"),
                                 parse_mapping(need("S"), Y, X, "/maps/S"), parse_mapping(need("T"), Y, X, "/maps/T")};
      if (cfg.scheme == Scheme::self_quadruple) {
        if (doc.contains("metric") && doc["metric"].contains("Y")) {
          fail("/metric/Y", "the self-quadruple scheme uses the single metric of X");
        }
        cfg.nu = cfg.mu;
        cfg.separate_y = false;
      }
    }
  }

  if (doc.contains("solve")) parse_solve(doc["solve"], cfg);
  if (doc.contains("axioms")) parse_axioms(doc["axioms"], cfg.axioms);
  if (doc.contains("hypotheses")) parse_hypotheses(doc["hypotheses"], cfg);

  InstanceSpec default_group;
  default_group.grid = cfg.grid;
  cfg.suite.groups = {default_group};
  cfg.suite.group_counts = {100};
  if (doc.contains("suite")) parse_suite(doc["suite"], cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return parse_config(doc);
}

void apply_overrides(RunConfig& cfg, std::optional<std::uint64_t> seed, std::optional<double> t_max) {
  if (seed) {
    cfg.axioms.seed = *seed;
    cfg.hypotheses.seed = *seed;
    cfg.suite.seed = *seed;
  }
  if (t_max) {
    if (!(*t_max > 0.0) || !std::isfinite(*t_max)) throw ConfigError("--t-max must be a positive finite number");
    if (*t_max <= cfg.grid.front()) throw ConfigError("--t-max must exceed the first grid value");
    cfg.grid = cfg.grid.extended_to(*t_max);
    cfg.grid_source += " extended to t_max " + format_number(*t_max) + " by --t-max";
    cfg.solve.grid = cfg.grid;
    for (auto& g : cfg.suite.groups) g.grid = cfg.grid;
  }
}

json defaults_json() {
  const SolveConfig s;
  const SuiteOptions o;
  const AxiomSettings a;
  return {
      {"grid", {{"lo", TGrid::kDefaultLo}, {"hi", TGrid::kDefaultHi}, {"points", TGrid::kDefaultPoints},
                {"spacing", "log"}}},
      {"solve", {{"eps", s.eps}, {"max_iter", s.max_iter}, {"stall_window", s.stall_window}, {"p_max", s.p_max},
                 {"verify_tol", s.verify_tol}, {"point_tol", s.point_tol}, {"uniqueness_tol", s.uniqueness_tol}}},
      {"metric", {{"form", "standard"}, {"tnorm", "product"}, {"crisp", "euclidean"}}},
      {"axioms", {{"tnorm_samples", a.tnorm_samples}, {"triples", a.triples}, {"seed", a.seed}}},
      {"hypotheses", {{"exclude_diagonal", true}}},
      {"suite", {{"seed", 1}, {"instances", 100}, {"scheme", "pair"}, {"dim", 2}, {"family", "affine"},
                 {"factor_lo", 0.05}, {"factor_hi", 0.9}, {"trajectory_samples", o.trajectory_samples},
                 {"random_samples", o.random_samples}, {"axiom_triples", o.axiom_triples},
                 {"uniqueness_starts", o.uniqueness_starts}, {"vacuity_scales", o.vacuity_scales},
                 {"workers", o.workers}}},
  };
}

}  // namespace fuzzyfp::cli
