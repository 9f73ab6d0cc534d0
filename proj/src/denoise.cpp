#include "myriad/denoise.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "myriad/errors.hpp"
#include "myriad/noise_level.hpp"
#include "myriad/similarity.hpp"

namespace myriad {

ImageGrid add_noise(const ImageGrid& img, double gamma, Rng& rng) {
  if (!(gamma > 0.0)) throw PreconditionError("noise scale must be positive");
  ImageGrid out = img;
  const CauchyParams noise{0.0, gamma};
  for (double& p : out.pixels()) p += sample_cauchy(noise, rng);
  return out;
}

int resolve_patch_side(const DenoiseConfig& cfg, double gamma) {
  if (cfg.patch_side != 0) return cfg.patch_side;
  return gamma <= 7.5 ? 3 : 5;
}

namespace {

void validate_config(const DenoiseConfig& cfg) {
  if (cfg.local_radius < 1) throw PreconditionError("local_radius must be >= 1");
  if (cfg.window < 1 || cfg.window % 2 == 0) throw PreconditionError("window must be odd");
  if (cfg.patch_side != 0 && (cfg.patch_side < 1 || cfg.patch_side % 2 == 0))
    throw PreconditionError("patch side must be odd");
  if (cfg.samples < 1 ||
      static_cast<long long>(cfg.samples) > static_cast<long long>(cfg.window) * cfg.window)
    throw PreconditionError("samples must be in [1, window^2]");
  if (cfg.weighted && !(cfg.kernel_h > 0.0))
    throw PreconditionError("weighted sampling requires kernel_h > 0");
  if (cfg.gamma && !(*cfg.gamma > 0.0)) throw PreconditionError("gamma must be positive");
}

}  // namespace

std::vector<std::pair<double, double>> select_samples(const ImageGrid& img, int row, int col,
                                                      const DenoiseConfig& cfg) {
  validate_config(cfg);
  std::vector<std::pair<double, double>> out;

  if (cfg.mode == DenoiseMode::local) {
    const int r = cfg.local_radius;
    const int count = (2 * r + 1) * (2 * r + 1);
    out.reserve(count);
    for (int dr = -r; dr <= r; ++dr)
      for (int dc = -r; dc <= r; ++dc)
        out.emplace_back(img.at_mirror(row + dr, col + dc), 1.0 / count);
    return out;
  }

  if (!cfg.gamma) throw PreconditionError("nonlocal sampling requires a noise level");
  const double gamma = *cfg.gamma;
  const Neighborhood nb = find_similar(img, row, col, resolve_patch_side(cfg, gamma),
                                       cfg.window, cfg.samples, gamma);
  out.reserve(nb.indices.size());
  if (cfg.weighted) {
    double total = 0.0;
    for (double ls : nb.log_sims) total += std::exp(ls / cfg.kernel_h);
    for (std::size_t i = 0; i < nb.indices.size(); ++i) {
      const auto [r, c] = nb.indices[i];
      out.emplace_back(img.at(r, c), std::exp(nb.log_sims[i] / cfg.kernel_h) / total);
    }
  } else {
    const double w = 1.0 / static_cast<double>(nb.indices.size());
    for (const auto& [r, c] : nb.indices) out.emplace_back(img.at(r, c), w);
  }
  return out;
}

namespace {

struct PixelEstimate {
  double value = 0.0;
  double gamma = 0.0;  // 0 marks "not estimated" in the gamma map
  bool converged = true;
};

PixelEstimate estimate_pixel(const std::vector<std::pair<double, double>>& samples,
                             const DenoiseConfig& cfg, const SolverConfig& solver,
                             double gamma_used) {
  std::vector<double> values(samples.size()), weights(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    values[i] = samples[i].first;
    weights[i] = samples[i].second;
  }
  const WeightedSample sample = WeightedSample::from_weighted(values, weights);

  if (sample.size() == 1)  // all samples equal: the fit degenerates to that value
    return {sample.values().front(), 0.0, true};

  if (cfg.estimator == EstimatorKind::generalized) {
    try {
      const EstimateResult fit = cfg.algorithm == JointAlgorithm::gmf
                                     ? estimate_joint_gmf(sample, solver)
                                     : estimate_joint_fast(sample, solver);
      return {fit.params.location, fit.params.scale, fit.converged};
    } catch (const PreconditionError&) {
      // Too few distinct values or a dominant weight; fall through to the
      // fixed-scale filter for this pixel. Its scale is not recorded.
    }
  }
  if (!(gamma_used > 0.0)) {
    // Local generalized mode has no global scale to fall back on. A dominant
    // weight sends the joint fit toward scale 0 with the location at the
    // heaviest value, so return that value directly.
    std::size_t best = 0;
    for (std::size_t i = 1; i < sample.size(); ++i)
      if (sample.weights()[i] > sample.weights()[best]) best = i;
    return {sample.values()[best], 0.0, true};
  }
  const EstimateResult fit = estimate_location_mf(sample, gamma_used, solver);
  return {fit.params.location,
          cfg.estimator == EstimatorKind::classical ? gamma_used : 0.0, fit.converged};
}

}  // namespace

DenoiseOutput denoise(const ImageGrid& img, const DenoiseConfig& cfg, const SolverConfig& solver,
                      int threads) {
  validate_config(cfg);
  if (threads < 1) throw PreconditionError("threads must be >= 1");

  const bool needs_gamma =
      cfg.mode == DenoiseMode::nonlocal || cfg.estimator == EstimatorKind::classical;
  DenoiseConfig resolved = cfg;
  if (needs_gamma && !resolved.gamma)
    resolved.gamma = estimate_global_gamma(img).global_gamma;
  const double gamma_used = resolved.gamma.value_or(0.0);

  DenoiseOutput out;
  out.image = ImageGrid(img.height(), img.width());
  if (resolved.estimator == EstimatorKind::generalized)
    out.gamma_map = ImageGrid(img.height(), img.width());
  out.gamma_used = gamma_used;

  std::atomic<long long> unconverged{0};
  const auto process_rows = [&](int r_begin, int r_end) {
    long long local_unconverged = 0;
    for (int r = r_begin; r < r_end; ++r) {
      for (int c = 0; c < img.width(); ++c) {
        const PixelEstimate e =
            estimate_pixel(select_samples(img, r, c, resolved), resolved, solver, gamma_used);
        out.image.at(r, c) = e.value;
        if (out.gamma_map) out.gamma_map->at(r, c) = e.gamma;
        if (!e.converged) ++local_unconverged;
      }
    }
    unconverged += local_unconverged;
  };

  const int n_threads = std::min(threads, img.height());
  if (n_threads <= 1) {
    process_rows(0, img.height());
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    const int chunk = (img.height() + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const int r0 = t * chunk;
      const int r1 = std::min(img.height(), r0 + chunk);
      if (r0 < r1) pool.emplace_back(process_rows, r0, r1);
    }
    for (std::thread& th : pool) th.join();
  }
  out.unconverged_pixels = unconverged.load();
  return out;
}

}  // namespace myriad
