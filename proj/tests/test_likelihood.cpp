#include <cmath>
#include <vector>

#include "doctest.h"
#include "myriad/errors.hpp"
#include "myriad/likelihood.hpp"
#include "myriad/rng.hpp"
#include "oracles.hpp"

using namespace myriad;

namespace {

WeightedSample random_sample(Rng& rng, int n) {
  std::vector<double> v(n), w(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = 20.0 * rng.uniform01() - 10.0;
    w[i] = 0.1 + rng.uniform01();
    total += w[i];
  }
  for (double& wi : w) wi /= total;
  return WeightedSample::from_weighted(v, w);
}

}  // namespace

TEST_CASE("construction sorts, merges duplicates, normalizes") {
  const std::vector<double> v{3.0, 1.0, 3.0, 2.0};
  const std::vector<double> w{1.0, 2.0, 3.0, 2.0};
  const WeightedSample s = WeightedSample::from_weighted(v, w);
  REQUIRE(s.size() == 3);
  CHECK(s.values() == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(s.weights()[0] == doctest::Approx(0.25));
  CHECK(s.weights()[1] == doctest::Approx(0.25));
  CHECK(s.weights()[2] == doctest::Approx(0.5));  // merged 3.0 entries
  double sum = 0.0;
  for (double wi : s.weights()) sum += wi;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("near-duplicates merge within relative tolerance") {
  const std::vector<double> v{5.0, 5.0 + 1e-13, 6.0};
  const WeightedSample s = WeightedSample::from_values(v);
  CHECK(s.size() == 2);
}

TEST_CASE("invalid construction rejected") {
  CHECK_THROWS_AS(WeightedSample::from_values(std::vector<double>{}), PreconditionError);
  CHECK_THROWS_AS(
      WeightedSample::from_weighted(std::vector<double>{1.0}, std::vector<double>{0.0}),
      PreconditionError);
  CHECK_THROWS_AS(
      WeightedSample::from_weighted(std::vector<double>{1.0}, std::vector<double>{-1.0}),
      PreconditionError);
}

TEST_CASE("objective fixtures") {
  const WeightedSample single = WeightedSample::from_values(std::vector<double>{0.0});
  CHECK(objective_l(single, {0, 1}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(objective_q(single, 0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));

  const WeightedSample pair = WeightedSample::from_values(std::vector<double>{-1.0, 1.0});
  CHECK(objective_l(pair, {0, 1}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(objective_q(pair, 0.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("objective value at the symmetric minimizer matches the grid oracle") {
  const WeightedSample tri = WeightedSample::from_values(std::vector<double>{-1.0, 0.0, 1.0});
  const CauchyParams opt{0.0, 1.0 / std::sqrt(3.0)};
  const CauchyParams from_grid = oracle::grid_minimize_l(tri);
  CHECK(objective_l(tri, opt) ==
        doctest::Approx(objective_l(tri, from_grid)).epsilon(1e-8));
  CHECK(from_grid.location == doctest::Approx(0.0).epsilon(1e-4));
  CHECK(from_grid.scale == doctest::Approx(opt.scale).epsilon(1e-4));
}

TEST_CASE("q equals l plus log scale") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const WeightedSample s = random_sample(rng, 6);
    const CauchyParams p{4.0 * rng.uniform01() - 2.0, 0.1 + 3.0 * rng.uniform01()};
    CHECK(objective_q(s, p.location, p.scale) - (objective_l(s, p) + std::log(p.scale)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("s0 fixtures and extended-precision oracle") {
  const WeightedSample single = WeightedSample::from_values(std::vector<double>{5.0});
  CHECK(stat_s0(single, {5, 3}) == doctest::Approx(1.0).epsilon(1e-15));

  const WeightedSample tri = WeightedSample::from_values(std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(stat_s0(tri, {0.0, 1.0 / std::sqrt(3.0)}) == doctest::Approx(0.5).epsilon(1e-12));

  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const WeightedSample s = random_sample(rng, 9);
    const CauchyParams p{rng.uniform01(), 0.2 + rng.uniform01()};
    CHECK(stat_s0(s, p) == doctest::Approx(oracle::s0_longdouble(s, p)).epsilon(1e-14));
  }
}

TEST_CASE("s1 fixtures") {
  const WeightedSample sym = WeightedSample::from_values(std::vector<double>{-3.0, 3.0});
  CHECK(stat_s1(sym, {0, 0.5}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(stat_s1(sym, {0, 7.0}) == doctest::Approx(0.0).epsilon(1e-15));

  const WeightedSample one = WeightedSample::from_values(std::vector<double>{1.0});
  CHECK(stat_s1(one, {0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("s1 bounded and tied to the location derivative") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const WeightedSample s = random_sample(rng, 7);
    const CauchyParams p{6.0 * rng.uniform01() - 3.0, 0.1 + 2.0 * rng.uniform01()};
    const double v1 = stat_s1(s, p);
    CHECK(std::abs(v1) <= 0.5 + 1e-15);
    const auto [fda, fdg] = oracle::finite_diff_gradient(
        [&](double a, double g) { return objective_l(s, {a, g}); }, p.location, p.scale);
    CHECK(v1 == doctest::Approx(-(p.scale / 2.0) * fda).epsilon(1e-6));
    (void)fdg;
  }
}

TEST_CASE("gradient identities and finite differences") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const WeightedSample s = random_sample(rng, 8);
    const CauchyParams p{6.0 * rng.uniform01() - 3.0, 0.1 + 2.0 * rng.uniform01()};
    const Gradient g = gradient(s, p);
    // s0 = 1/2 + (scale/2) dL/dscale,  s1 = -(scale/2) dL/dlocation
    CHECK(stat_s0(s, p) == doctest::Approx(0.5 + 0.5 * p.scale * g.d_scale).epsilon(1e-12));
    CHECK(stat_s1(s, p) == doctest::Approx(-0.5 * p.scale * g.d_location).epsilon(1e-12));
    const auto [fda, fdg] = oracle::finite_diff_gradient(
        [&](double a, double gg) { return objective_l(s, {a, gg}); }, p.location, p.scale);
    CHECK(g.d_location == doctest::Approx(fda).epsilon(1e-6));
    CHECK(g.d_scale == doctest::Approx(fdg).epsilon(1e-6));
  }
}

TEST_CASE("gradient vanishes at the symmetric critical point") {
  const WeightedSample tri = WeightedSample::from_values(std::vector<double>{-1.0, 0.0, 1.0});
  const Gradient g = gradient(tri, {0.0, 1.0 / std::sqrt(3.0)});
  CHECK(std::abs(g.d_location) < 1e-10);
  CHECK(std::abs(g.d_scale) < 1e-10);
}

TEST_CASE("location critical points lie inside the sample range") {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const WeightedSample s = random_sample(rng, 6);
    const double scale = 0.1 + 2.0 * rng.uniform01();
    // dL/da has the sign of (a - samples): positive derivative of Q outside
    CHECK(gradient(s, {s.min_value() - 1e-9, scale}).d_location < 0.0);
    CHECK(gradient(s, {s.max_value() + 1e-9, scale}).d_location > 0.0);
  }
}

TEST_CASE("scale bracket contains the bisection root") {
  Rng rng(59);
  for (int k = 0; k < 50; ++k) {
    const WeightedSample s = random_sample(rng, 5 + (k % 5));
    const ScaleBracket bracket = scale_bracket(s);
    const double a = s.min_value() + s.span() * (0.1 + 0.8 * rng.uniform01());
    const double root = oracle::bisect_scale(s, a);
    CHECK(root > bracket.lower);
    CHECK(root < bracket.upper);
    CHECK(stat_s0(s, {a, root}) == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("scale bracket preconditions surface") {
  const WeightedSample pair = WeightedSample::from_values(std::vector<double>{-1.0, 1.0});
  CHECK_THROWS_AS(scale_bracket(pair), PreconditionError);  // n=2: weights hit 1/2
  const std::vector<double> v{0.0, 1.0, 2.0};
  const std::vector<double> w{0.6, 0.2, 0.2};
  CHECK_THROWS_AS(scale_bracket(WeightedSample::from_weighted(v, w)), PreconditionError);
}
