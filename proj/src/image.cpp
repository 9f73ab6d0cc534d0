#include "myriad/image.hpp"

#include <cmath>

#include "myriad/errors.hpp"

namespace myriad {

int mirror_index(int i, int n) {
  // Reflection about the half-sample boundary: -1 -> 0, n -> n-1.
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

ImageGrid::ImageGrid(int height, int width, double fill)
    : height_(height), width_(width),
      pixels_(static_cast<std::size_t>(height) * width, fill) {
  if (height < 1 || width < 1) throw PreconditionError("image dimensions must be >= 1");
}

ImageGrid ImageGrid::from_data(int height, int width, std::vector<double> pixels) {
  ImageGrid img(height, width);
  if (pixels.size() != img.pixels_.size())
    throw PreconditionError("pixel buffer size does not match dimensions");
  for (double v : pixels)
    if (!std::isfinite(v)) throw PreconditionError("pixel values must be finite");
  img.pixels_ = std::move(pixels);
  return img;
}

}  // namespace myriad
