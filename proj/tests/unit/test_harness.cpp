#include <doctest.h>

#include <cmath>
#include <set>

#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/harness.hpp"

using namespace fuzzyfp;

namespace {

const MapPair& pair_of(const Instance& inst) { return std::get<MapPair>(inst.problem); }
const MapQuadruple& quad_of(const Instance& inst) { return std::get<MapQuadruple>(inst.problem); }

// Product of two row-major square matrices.
std::vector<double> matmul(std::size_t n, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

SuiteOptions quick_options() {
  SuiteOptions o;
  o.trajectory_samples = 4;
  o.random_samples = 4;
  o.axiom_triples = 20;
  return o;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("names round-trip") {
  for (Scheme s : {Scheme::pair, Scheme::quadruple, Scheme::self_quadruple}) CHECK(parse_scheme(to_string(s)) == s);
  for (MapFamily f : {MapFamily::affine, MapFamily::constant, MapFamily::mixed}) CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS_AS(parse_scheme("triple"), ConfigError);
  CHECK_THROWS_AS(parse_family("quadratic"), ConfigError);
}

TEST_CASE("spec validation") {
  InstanceSpec s;
  CHECK_NOTHROW(s.validate());
  s.dim = 0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = {};
  s.factor_hi = 1.0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = {};
  s.factor_lo = 0.8;
  s.factor_hi = 0.5;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = {};
  s.expansive = true;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.factor_lo = 1.1;
  s.factor_hi = 2.0;
  CHECK_NOTHROW(s.validate());
  s = {};
  s.metric = FuzzyMetricForm::table;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = {};
  s.half_width = 0.0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("generation is deterministic in the spec") {
  for (Scheme scheme : {Scheme::pair, Scheme::quadruple}) {
    InstanceSpec spec;
    spec.scheme = scheme;
    spec.seed = 99;
    const Instance a = gen_instance(spec);
    const Instance b = gen_instance(spec);
    CHECK(a.factors == b.factors);
    if (scheme == Scheme::pair) {
      CHECK(pair_of(a).T.matrix() == pair_of(b).T.matrix());
      CHECK(pair_of(a).S.offset() == pair_of(b).S.offset());
    } else {
      CHECK(quad_of(a).A.matrix() == quad_of(b).A.matrix());
      CHECK(quad_of(a).T.offset() == quad_of(b).T.offset());
      CHECK(a.anchor_z == b.anchor_z);
    }
  }
}

TEST_CASE("seeds give distinct contractive instances") {
  InstanceSpec base;
  const auto specs = expand_specs(base, 100);
  REQUIRE(specs.size() == 100);
  CHECK(specs.back().seed == base.seed + 99);
  std::set<std::vector<double>> seen;
  for (const auto& spec : specs) {
    const Instance inst = gen_instance(spec);
    const auto& p = pair_of(inst);
    seen.insert(p.T.matrix());
    const auto st = matmul(2, p.S.matrix(), p.T.matrix());
    CHECK(operator_norm(2, 2, st, CrispMetric::euclidean) < 1.0);
    for (double f : inst.factors) {
      CHECK(f >= base.factor_lo);
      CHECK(f <= base.factor_hi);
    }
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("pinned factor bounds the operator norm") {
  InstanceSpec spec;
  spec.factor_lo = spec.factor_hi = 0.3;
  for (CrispMetric crisp : {CrispMetric::euclidean, CrispMetric::max}) {
    spec.crisp = crisp;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      spec.seed = seed;
      const Instance inst = gen_instance(spec);
      for (const Mapping* m : {&pair_of(inst).T, &pair_of(inst).S}) {
        CHECK(operator_norm(2, 2, m->matrix(), CrispMetric::euclidean) <= 0.3 + 1e-12);
        CHECK(operator_norm(2, 2, m->matrix(), CrispMetric::max) <= 0.3 + 1e-12);
      }
    }
  }
}

TEST_CASE("contractive maps keep the carrier box") {
  for (Scheme scheme : {Scheme::pair, Scheme::quadruple}) {
    InstanceSpec spec;
    spec.scheme = scheme;
    spec.dim = 3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      spec.seed = seed;
      const Instance inst = gen_instance(spec);
      const CarrierSpace& box = inst.mu.carrier();
      std::vector<Mapping> maps;
      if (scheme == Scheme::pair) {
        maps = {pair_of(inst).T, pair_of(inst).S};
      } else {
        const auto& q = quad_of(inst);
        maps = {q.A, q.B, q.S, q.T};
      }
      // Affine images of a box are extremal at the corners.
      for (const auto& m : maps) {
        for (int corner = 0; corner < 8; ++corner) {
          std::vector<double> c(3);
          for (int i = 0; i < 3; ++i) c[i] = (corner >> i) & 1 ? spec.half_width : -spec.half_width;
          CHECK(box.contains(m(Point(c))));
        }
      }
    }
  }
}

TEST_CASE("quadruple instances are anchored at a common fixed point") {
  InstanceSpec spec;
  spec.scheme = Scheme::quadruple;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    const Instance inst = gen_instance(spec);
    const auto& q = quad_of(inst);
    REQUIRE(inst.anchor_z.has_value());
    const Point& z = *inst.anchor_z;
    const Point& w = *inst.anchor_w;
    const CarrierSpace& X = inst.mu.carrier();
    CHECK(X.equal(q.A(z), w, 1e-12));
    CHECK(X.equal(q.B(z), w, 1e-12));
    CHECK(X.equal(q.S(w), z, 1e-12));
    CHECK(X.equal(q.T(w), z, 1e-12));
  }
}

TEST_CASE("constant and mixed families") {
  InstanceSpec spec;
  spec.family = MapFamily::constant;
  const Instance c = gen_instance(spec);
  CHECK(pair_of(c).T.form() == MappingForm::constant);
  CHECK(pair_of(c).S.form() == MappingForm::constant);
  CHECK(c.factors == std::vector<double>{0.0, 0.0});

  spec.scheme = Scheme::self_quadruple;
  spec.family = MapFamily::mixed;
  const Instance m = gen_instance(spec);
  CHECK(quad_of(m).A.form() == MappingForm::affine);
  CHECK(quad_of(m).B.form() == MappingForm::affine);
  CHECK(quad_of(m).S.form() == MappingForm::constant);
  CHECK(quad_of(m).T.form() == MappingForm::constant);
}

TEST_CASE("expansive instances are flagged as diverging") {
  InstanceSpec spec;
  spec.expansive = true;
  spec.factor_lo = 1.1;
  spec.factor_hi = 2.0;
  auto specs = expand_specs(spec, 5);
  spec.scheme = Scheme::quadruple;
  for (const auto& s : expand_specs(spec, 5)) specs.push_back(s);
  const SuiteVerdict v = run_suite(specs, SolveConfig{}, quick_options());
  CHECK(v.diverging == 10);
  CHECK(v.all_passed());
  for (const auto& row : v.rows) {
    CHECK(row.expansive);
    CHECK_FALSE(row.conclusions_pass);
  }
}

TEST_CASE("empty spec list is a usage error") {
  CHECK_THROWS_AS(run_suite({}, SolveConfig{}), UsageError);
}

TEST_CASE("suite rows are ordered and independent of the worker count") {
  InstanceSpec base;
  base.seed = 500;
  auto specs = expand_specs(base, 12);
  base.scheme = Scheme::quadruple;
  for (const auto& s : expand_specs(base, 12)) specs.push_back(s);

  SuiteOptions serial = quick_options();
  SuiteOptions parallel = serial;
  parallel.workers = 4;
  const SuiteVerdict a = run_suite(specs, SolveConfig{}, serial);
  const SuiteVerdict b = run_suite(specs, SolveConfig{}, parallel);
  REQUIRE(a.rows.size() == specs.size());
  REQUIRE(b.rows.size() == specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(a.rows[i].index == i);
    CHECK(b.rows[i].index == i);
    CHECK(a.rows[i].seed == specs[i].seed);
    CHECK(a.rows[i].z == b.rows[i].z);
    CHECK(a.rows[i].w == b.rows[i].w);
    CHECK(a.rows[i].iterations == b.rows[i].iterations);
    CHECK(a.rows[i].k_hat.size() == b.rows[i].k_hat.size());
    for (std::size_t j = 0; j < a.rows[i].k_hat.size(); ++j) {
      CHECK((a.rows[i].k_hat[j] == b.rows[i].k_hat[j] ||
             (std::isnan(a.rows[i].k_hat[j]) && std::isnan(b.rows[i].k_hat[j]))));
    }
  }
  CHECK(a.passed == b.passed);
}

TEST_CASE("aggregate counts match the rows") {
  InstanceSpec base;
  base.seed = 40;
  auto specs = expand_specs(base, 6);
  InstanceSpec ex = base;
  ex.expansive = true;
  ex.factor_lo = 1.5;
  ex.factor_hi = 1.5;
  for (const auto& s : expand_specs(ex, 3)) specs.push_back(s);
  const SuiteVerdict v = run_suite(specs, SolveConfig{}, quick_options());
  std::size_t converged = 0, diverging = 0, passed = 0, unique = 0, holds = 0;
  for (const auto& row : v.rows) {
    converged += row.status == SolveStatus::converged;
    diverging += row.status == SolveStatus::diverging;
    passed += row.passed;
    unique += row.unique;
    holds += row.hypothesis_holds;
    CHECK(row.error.empty());
    CHECK(row.axiom_violations == 0);
  }
  CHECK(v.instances == 9);
  CHECK(v.converged == converged);
  CHECK(v.diverging == diverging);
  CHECK(v.passed == passed);
  CHECK(v.unique == unique);
  CHECK(v.hypothesis_holds == holds);
  CHECK(v.converged + v.diverging + v.max_iter + v.errors == v.instances);
  CHECK(v.axiom_clean == 9);
  CHECK(v.converged == 6);
  CHECK(v.diverging == 3);
}

TEST_CASE("sampled constant does not decrease with t_max") {
  InstanceSpec base;
  base.seed = 900;
  SuiteOptions o = quick_options();
  o.vacuity_scales = {10.0, 100.0};
  const SuiteVerdict v = run_suite(expand_specs(base, 10), SolveConfig{}, o);
  for (const auto& row : v.rows) {
    REQUIRE(row.k_hat.size() == 3);
    REQUIRE(row.grid_t_max.size() == 3);
    CHECK(row.grid_t_max[0] == doctest::Approx(1e2));
    CHECK(row.grid_t_max[2] == doctest::Approx(1e4));
    CHECK(row.k_hat[1] >= row.k_hat[0]);
    CHECK(row.k_hat[2] >= row.k_hat[1]);
  }
}

}  // TEST_SUITE
