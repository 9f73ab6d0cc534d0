#pragma once

#include "myriad/image.hpp"

namespace myriad {

/// Peak signal-to-noise ratio in dB with the peak fixed at 255:
/// 10 log10(255^2 / mean squared error). Identical images give +infinity.
double psnr(const ImageGrid& test, const ImageGrid& ref);

/// Mean structural similarity with the reference construction: 11x11
/// Gaussian window (sigma 1.5), K1 = 0.01, K2 = 0.03, dynamic range 255,
/// averaged over window positions fully inside the image. Both sides must
/// be at least 11.
double ssim(const ImageGrid& test, const ImageGrid& ref);

struct QualityReport {
  double psnr_db = 0.0;
  double ssim = 0.0;
};

QualityReport quality(const ImageGrid& test, const ImageGrid& ref);

}  // namespace myriad
