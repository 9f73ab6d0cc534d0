#pragma once

#include <vector>

namespace myriad {

/// Maps an out-of-range index into [0,n) by mirror reflection about the
/// array boundaries (…, x[1], x[0] | x[0], x[1], …).
int mirror_index(int i, int n);

/// 2D grid of real-valued intensities, row-major. Values are nominally in
/// [0,255] but are not clamped; heavy-tailed noise produces values far
/// outside that range.
class ImageGrid {
 public:
  ImageGrid() = default;
  ImageGrid(int height, int width, double fill = 0.0);
  static ImageGrid from_data(int height, int width, std::vector<double> pixels);

  int height() const { return height_; }
  int width() const { return width_; }

  double& at(int r, int c) { return pixels_[static_cast<std::size_t>(r) * width_ + c]; }
  double at(int r, int c) const { return pixels_[static_cast<std::size_t>(r) * width_ + c]; }

  /// Read with mirror boundary extension.
  double at_mirror(int r, int c) const {
    return at(mirror_index(r, height_), mirror_index(c, width_));
  }

  const std::vector<double>& pixels() const { return pixels_; }
  std::vector<double>& pixels() { return pixels_; }

  bool same_shape(const ImageGrid& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> pixels_;
};

}  // namespace myriad
