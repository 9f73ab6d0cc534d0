#include <cmath>

#include "doctest.h"
#include "myriad/denoise.hpp"
#include "myriad/errors.hpp"

using namespace myriad;

namespace {

ImageGrid noisy_texture(int h, int w, double gamma, std::uint64_t seed) {
  ImageGrid img(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      img.at(r, c) = 120.0 + 60.0 * std::sin(0.3 * r) * std::cos(0.2 * c);
  Rng rng(seed);
  return add_noise(img, gamma, rng);
}

}  // namespace

TEST_CASE("add_noise is seed-deterministic and unclamped") {
  const ImageGrid img(32, 32, 100.0);
  Rng r1(9), r2(9);
  const ImageGrid n1 = add_noise(img, 5.0, r1);
  const ImageGrid n2 = add_noise(img, 5.0, r2);
  CHECK(n1.pixels() == n2.pixels());

  double lo = 1e300, hi = -1e300;
  Rng r3(123);
  ImageGrid big(64, 64, 100.0);
  const ImageGrid noisy = add_noise(big, 50.0, r3);
  for (double p : noisy.pixels()) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  CHECK(lo < 0.0);  // heavy tails push outside [0,255]
  CHECK(hi > 255.0);
}

TEST_CASE("noise median stays at the clean value") {
  ImageGrid img(256, 256, 100.0);
  Rng rng(77);
  ImageGrid noisy = add_noise(img, 5.0, rng);
  auto px = noisy.pixels();
  std::nth_element(px.begin(), px.begin() + px.size() / 2, px.end());
  CHECK(std::abs(px[px.size() / 2] - 100.0) < 0.5);
}

TEST_CASE("local sample selection") {
  ImageGrid img(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) img.at(r, c) = 8.0 * r + c;
  DenoiseConfig cfg;
  cfg.mode = DenoiseMode::local;
  const auto samples = select_samples(img, 4, 4, cfg);
  REQUIRE(samples.size() == 9);
  double sum = 0.0;
  for (const auto& [v, w] : samples) {
    CHECK(w == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    sum += w;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(samples[4].first == img.at(4, 4));
}

TEST_CASE("weighted nonlocal samples: uniform under exact ties") {
  const ImageGrid img(16, 16, 50.0);
  DenoiseConfig cfg;
  cfg.samples = 8;
  cfg.window = 7;
  cfg.weighted = true;
  cfg.kernel_h = 2.0;
  cfg.gamma = 5.0;
  const auto samples = select_samples(img, 8, 8, cfg);
  REQUIRE(samples.size() == 8);
  for (const auto& [v, w] : samples) CHECK(w == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("kernel weight ratio between log-sims 0 and -h is e") {
  const double h = 1.7;
  // two-candidate situation emulated directly through the kernel formula
  const double w0 = std::exp(0.0 / h);
  const double w1 = std::exp(-h / h);
  CHECK(w0 / w1 == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("noiseless constant image passes through unchanged") {
  const ImageGrid img(24, 24, 130.0);
  for (DenoiseMode mode : {DenoiseMode::local, DenoiseMode::nonlocal}) {
    DenoiseConfig cfg;
    cfg.mode = mode;
    cfg.estimator = EstimatorKind::generalized;
    cfg.gamma = 5.0;  // similarity scale for the nonlocal mode
    cfg.window = 7;
    cfg.samples = 9;
    const DenoiseOutput out = denoise(img, cfg);
    for (double p : out.image.pixels()) CHECK(p == 130.0);
    REQUIRE(out.gamma_map.has_value());
    for (double g : out.gamma_map->pixels()) CHECK(g == 0.0);  // unset marker
  }
}

TEST_CASE("row-partitioned denoising stitches to the full result") {
  const ImageGrid noisy = noisy_texture(24, 20, 4.0, 11);
  DenoiseConfig cfg;
  cfg.window = 9;
  cfg.samples = 12;
  cfg.gamma = 4.0;
  const DenoiseOutput full = denoise(noisy, cfg, {}, 1);
  const DenoiseOutput threaded = denoise(noisy, cfg, {}, 5);
  CHECK(full.image.pixels() == threaded.image.pixels());
  REQUIRE(full.gamma_map.has_value());
  REQUIRE(threaded.gamma_map.has_value());
  CHECK(full.gamma_map->pixels() == threaded.gamma_map->pixels());
}

TEST_CASE("shift equivariance") {
  const ImageGrid noisy = noisy_texture(20, 20, 3.0, 21);
  ImageGrid shifted = noisy;
  const double beta = 40.0;
  for (double& p : shifted.pixels()) p += beta;

  DenoiseConfig cfg;
  cfg.window = 9;
  cfg.samples = 10;
  cfg.gamma = 3.0;
  // equivariance holds up to the solver tolerance; tighten it for the check
  const SolverConfig solver{1e-11, 5000};
  const DenoiseOutput a = denoise(noisy, cfg, solver);
  const DenoiseOutput b = denoise(shifted, cfg, solver);
  for (std::size_t i = 0; i < a.image.pixels().size(); ++i)
    CHECK(std::abs(b.image.pixels()[i] - a.image.pixels()[i] - beta) < 1e-5);
}

TEST_CASE("estimated scale is higher on edges than in flat areas") {
  // step edge down the middle, mild noise
  ImageGrid img(32, 32);
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c) img.at(r, c) = c < 16 ? 60.0 : 190.0;
  Rng rng(5);
  const ImageGrid noisy = add_noise(img, 2.0, rng);

  DenoiseConfig cfg;
  cfg.mode = DenoiseMode::local;
  cfg.estimator = EstimatorKind::generalized;
  const DenoiseOutput out = denoise(noisy, cfg);
  REQUIRE(out.gamma_map.has_value());

  double edge_sum = 0.0, flat_sum = 0.0;
  int edge_n = 0, flat_n = 0;
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c) {
      const double g = out.gamma_map->at(r, c);
      if (g <= 0.0) continue;
      if (c == 15 || c == 16) {
        edge_sum += g;
        ++edge_n;
      } else if (c < 13 || c > 19) {
        flat_sum += g;
        ++flat_n;
      }
    }
  REQUIRE(edge_n > 0);
  REQUIRE(flat_n > 0);
  CHECK(edge_sum / edge_n > flat_sum / flat_n);
}

TEST_CASE("classical mode requires a scale and fills no map") {
  const ImageGrid noisy = noisy_texture(16, 16, 2.0, 31);
  DenoiseConfig cfg;
  cfg.estimator = EstimatorKind::classical;
  cfg.window = 7;
  cfg.samples = 9;
  cfg.gamma = 2.0;
  const DenoiseOutput out = denoise(noisy, cfg);
  CHECK_FALSE(out.gamma_map.has_value());
  CHECK(out.gamma_used == 2.0);
}

TEST_CASE("config validation") {
  const ImageGrid img(8, 8, 1.0);
  DenoiseConfig cfg;
  cfg.window = 6;
  CHECK_THROWS_AS(denoise(img, cfg), PreconditionError);
  cfg = {};
  cfg.weighted = true;  // missing kernel_h
  cfg.gamma = 1.0;
  CHECK_THROWS_AS(denoise(img, cfg), PreconditionError);
  cfg = {};
  cfg.samples = 2000;  // > window^2
  CHECK_THROWS_AS(denoise(img, cfg), PreconditionError);
}

TEST_CASE("patch side resolves against the noise level") {
  DenoiseConfig cfg;
  CHECK(resolve_patch_side(cfg, 5.0) == 3);
  CHECK(resolve_patch_side(cfg, 10.0) == 5);
  cfg.patch_side = 7;
  CHECK(resolve_patch_side(cfg, 10.0) == 7);
}
