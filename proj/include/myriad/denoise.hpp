#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "myriad/estimators.hpp"
#include "myriad/image.hpp"
#include "myriad/rng.hpp"

namespace myriad {

enum class DenoiseMode { local, nonlocal };
enum class EstimatorKind { generalized, classical };
enum class JointAlgorithm { gmf, fast };

struct DenoiseConfig {
  DenoiseMode mode = DenoiseMode::nonlocal;
  EstimatorKind estimator = EstimatorKind::generalized;
  JointAlgorithm algorithm = JointAlgorithm::fast;
  int local_radius = 1;   // local mode: (2r+1)^2 neighborhood
  int patch_side = 0;     // 0 = auto: 3 for gamma <= 7.5, else 5
  int window = 31;        // search window side
  int samples = 40;       // nonlocal sample count
  bool weighted = false;  // similarity-kernel weights instead of uniform
  double kernel_h = 0.0;  // kernel bandwidth, required iff weighted
  std::optional<double> gamma;  // noise level; estimated from the image when absent
};

struct DenoiseOutput {
  ImageGrid image;
  std::optional<ImageGrid> gamma_map;  // generalized mode: per-pixel scale, 0 where not estimated
  double gamma_used = 0.0;
  long long unconverged_pixels = 0;  // pixels whose solve hit the iteration cap
};

/// f = u + gamma * eta with standard Cauchy eta, applied pixelwise in
/// row-major order. Output is unclamped.
ImageGrid add_noise(const ImageGrid& img, double gamma, Rng& rng);

/// The (value, weight) sample set a pixel is estimated from. Local mode:
/// the mirror-extended (2r+1)^2 neighborhood with uniform weights. Nonlocal
/// mode: center values of the most similar patches, uniform or
/// exp(log_sim / h) kernel weights (cfg.gamma required).
std::vector<std::pair<double, double>> select_samples(const ImageGrid& img, int row, int col,
                                                      const DenoiseConfig& cfg);

/// Patch side after resolving the automatic choice against the noise level.
int resolve_patch_side(const DenoiseConfig& cfg, double gamma);

/// Pixelwise myriad filtering. Each output pixel depends only on the input
/// image, so results are identical for any thread count.
DenoiseOutput denoise(const ImageGrid& img, const DenoiseConfig& cfg = {},
                      const SolverConfig& solver = {}, int threads = 1);

}  // namespace myriad
