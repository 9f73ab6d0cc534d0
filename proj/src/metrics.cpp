#include "myriad/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "myriad/errors.hpp"

namespace myriad {

double psnr(const ImageGrid& test, const ImageGrid& ref) {
  if (!test.same_shape(ref)) throw DimensionMismatchError("psnr: image dimensions differ");
  double sq = 0.0;
  const auto& a = test.pixels();
  const auto& b = ref.pixels();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  const double mse = sq / static_cast<double>(a.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

constexpr int kWin = 11;

std::array<double, kWin * kWin> gaussian_window() {
  std::array<double, kWin * kWin> w{};
  const double sigma = 1.5;
  double total = 0.0;
  for (int r = 0; r < kWin; ++r)
    for (int c = 0; c < kWin; ++c) {
      const double dr = r - kWin / 2;
      const double dc = c - kWin / 2;
      w[r * kWin + c] = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
      total += w[r * kWin + c];
    }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

double ssim(const ImageGrid& test, const ImageGrid& ref) {
  if (!test.same_shape(ref)) throw DimensionMismatchError("ssim: image dimensions differ");
  if (test.height() < kWin || test.width() < kWin)
    throw TooSmallError("ssim: both sides must be at least 11");

  static const std::array<double, kWin * kWin> win = gaussian_window();
  const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  const double c2 = (0.03 * 255.0) * (0.03 * 255.0);

  double total = 0.0;
  long long count = 0;
  for (int r = 0; r + kWin <= test.height(); ++r) {
    for (int c = 0; c + kWin <= test.width(); ++c) {
      double mx = 0, my = 0, xx = 0, yy = 0, xy = 0;
      for (int i = 0; i < kWin; ++i)
        for (int j = 0; j < kWin; ++j) {
          const double w = win[i * kWin + j];
          const double x = test.at(r + i, c + j);
          const double y = ref.at(r + i, c + j);
          mx += w * x;
          my += w * y;
          xx += w * x * x;
          yy += w * y * y;
          xy += w * x * y;
        }
      const double vx = xx - mx * mx;
      const double vy = yy - my * my;
      const double cov = xy - mx * my;
      const double s = ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
                       ((mx * mx + my * my + c1) * (vx + vy + c2));
      total += s;
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

QualityReport quality(const ImageGrid& test, const ImageGrid& ref) {
  return {psnr(test, ref), ssim(test, ref)};
}

}  // namespace myriad
