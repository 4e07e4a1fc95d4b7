#include <doctest.h>

#include "fuzzyfp/errors.hpp"
#include "fuzzyfp/mapping.hpp"
#include "helpers.hpp"

using namespace fuzzyfp;

TEST_SUITE("mapping") {

TEST_CASE("affine maps") {
  const Mapping m = Mapping::affine(2, 2, {1.0, 2.0, 3.0, 4.0}, {0.5, -0.5});
  CHECK(m(Point{1.0, 1.0}) == Point{3.5, 6.5});
  CHECK_THROWS_AS(m(Point{1.0}), DomainError);
  CHECK_THROWS_AS(Mapping::affine(2, 2, {1.0, 2.0, 3.0}, {0.0, 0.0}), DomainError);
  const Mapping line = Mapping::affine_1d(0.5, 1.0);
  CHECK(line(Point{2.0}) == Point{2.0});
  CHECK(Mapping::identity(3)(Point{1.0, 2.0, 3.0}) == Point{1.0, 2.0, 3.0});
}

TEST_CASE("overflow to infinity is a domain error") {
  const Mapping big = Mapping::affine_1d(1e300, 0.0);
  CHECK_THROWS_AS(big(Point{1e300}), DomainError);
}

TEST_CASE("constant, table and composed maps") {
  CHECK(Mapping::constant(Point{5.0})(Point{-3.0}) == Point{5.0});
  const Mapping tab = Mapping::table({2, 0, 1});
  CHECK(tab(Point::at_index(0)) == Point::at_index(2));
  CHECK_THROWS_AS(tab(Point::at_index(3)), DomainError);
  CHECK_THROWS_AS(tab(Point{0.0}), DomainError);
  const Mapping comp = Mapping::composed({Mapping::affine_1d(2.0, 0.0), Mapping::affine_1d(1.0, 1.0)});
  CHECK(comp(Point{3.0}) == Point{7.0});
}

TEST_CASE("codomain check") {
  const auto box = CarrierSpace::box({0.0}, {1.0});
  CHECK_NOTHROW(image(Mapping::affine_1d(0.5, 0.0), Point{1.0}, box));
  CHECK_THROWS_AS(image(Mapping::affine_1d(2.0, 0.0), Point{1.0}, box), CodomainError);
}

TEST_CASE("Lipschitz constants") {
  const Mapping m = Mapping::affine(2, 2, {3.0, 0.0, 0.0, -4.0}, {0.0, 0.0});
  CHECK(*m.lipschitz(CrispMetric::euclidean) == doctest::Approx(4.0));
  CHECK(*m.lipschitz(CrispMetric::max) == doctest::Approx(4.0));
  const Mapping r = Mapping::affine(2, 2, {1.0, 1.0, 0.0, 0.0}, {0.0, 0.0});
  CHECK(*r.lipschitz(CrispMetric::euclidean) == doctest::Approx(std::sqrt(2.0)));
  CHECK(*r.lipschitz(CrispMetric::max) == doctest::Approx(2.0));
  CHECK(*Mapping::constant(Point{1.0}).lipschitz(CrispMetric::euclidean) == 0.0);
  CHECK_FALSE(Mapping::table({0, 1}).lipschitz(CrispMetric::table).has_value());
  const Mapping comp = Mapping::composed({Mapping::affine_1d(0.5, 1.0), Mapping::affine_1d(0.25, 0.0)});
  CHECK(*comp.lipschitz(CrispMetric::euclidean) == doctest::Approx(0.125));
}

}  // TEST_SUITE
