#include "myriad/noise_level.hpp"

#include <cmath>

#include "myriad/errors.hpp"
#include "myriad/weighted_sample.hpp"

namespace myriad {

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw LengthMismatchError("kendall_tau: sequence lengths differ");
  const std::size_t n = x.size();
  if (n < 2) throw LengthMismatchError("kendall_tau: need at least two observations");
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 || dy == 0.0) continue;  // tied pair
      if ((dx > 0.0) == (dy > 0.0))
        ++concordant;
      else
        ++discordant;
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return static_cast<double>(concordant - discordant) / pairs;
}

double kendall_z(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double tau = kendall_tau(x, y);
  return 3.0 * std::sqrt(n * (n - 1.0)) / std::sqrt(2.0 * (2.0 * n + 5.0)) * tau;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("normal_quantile: p must be in (0,1)");
  // Acklam's algorithm.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

bool test_block_constant(const ImageGrid& img, int row0, int col0, int size,
                         const RegionTestConfig& cfg) {
  if (size < 2) throw PreconditionError("block side must be at least 2");
  if (row0 < 0 || col0 < 0 || row0 + size > img.height() || col0 + size > img.width())
    throw PreconditionError("block exceeds image bounds");
  const double critical = normal_quantile(1.0 - cfg.alpha / 2.0);

  static constexpr int offsets[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  std::vector<double> x, y;
  for (const auto& off : offsets) {
    x.clear();
    y.clear();
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        const int rn = r + off[0];
        const int cn = c + off[1];
        if (rn < 0 || rn >= size || cn < 0 || cn >= size) continue;
        x.push_back(img.at(row0 + r, col0 + c));
        y.push_back(img.at(row0 + rn, col0 + cn));
      }
    }
    if (std::abs(kendall_z(x, y)) > critical) return false;
  }
  return true;
}

ConstantRegionReport estimate_global_gamma(const ImageGrid& img, const RegionTestConfig& cfg,
                                           const SolverConfig& solver) {
  if (cfg.min_block < 2 || cfg.initial_block < cfg.min_block)
    throw PreconditionError("block sizes must satisfy initial_block >= min_block >= 2");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw PreconditionError("alpha must be in (0,1)");
  if (img.height() < cfg.min_block || img.width() < cfg.min_block)
    throw PreconditionError("image too small for the smallest block size");

  std::vector<BlockRef> accepted;
  for (int size = cfg.initial_block; size >= cfg.min_block; size /= 2) {
    if (size > img.height() || size > img.width()) continue;
    accepted.clear();
    for (int r = 0; r + size <= img.height(); r += size)
      for (int c = 0; c + size <= img.width(); c += size)
        if (test_block_constant(img, r, c, size, cfg)) accepted.push_back({r, c, size});
    if (static_cast<int>(accepted.size()) >= cfg.min_regions) break;
  }

  ConstantRegionReport report;
  std::vector<double> pixels;
  for (const BlockRef& block : accepted) {
    pixels.clear();
    for (int r = 0; r < block.size; ++r)
      for (int c = 0; c < block.size; ++c)
        pixels.push_back(img.at(block.row + r, block.col + c));
    try {
      const WeightedSample sample = WeightedSample::from_values(pixels);
      const EstimateResult fit = estimate_joint_fast(sample, solver);
      report.accepted_blocks.push_back(block);
      report.per_block_gamma.push_back(fit.params.scale);  // location discarded
    } catch (const PreconditionError&) {
      // Noiseless or near-constant block: too few distinct values for a
      // joint fit. It contributes no scale estimate.
    }
  }
  if (report.per_block_gamma.empty())
    throw NoConstantRegionsError("no constant region found at the smallest block size");

  double total = 0.0;
  for (double g : report.per_block_gamma) total += g;
  report.global_gamma = total / static_cast<double>(report.per_block_gamma.size());
  return report;
}

}  // namespace myriad
