#pragma once

#include <utility>
#include <vector>

#include "myriad/image.hpp"

namespace myriad {

/// Square patch of odd side length read around a center pixel with mirror
/// boundary; values are row-major, length side*side.
struct Patch {
  int center_row = 0;
  int center_col = 0;
  int side = 0;
  std::vector<double> values;
};

Patch extract_patch(const ImageGrid& img, int row, int col, int side);

/// Log of the likelihood-ratio similarity of two pixel values under Cauchy
/// noise with the given scale: -2 log(((x-y)/(2 scale))^2 + 1). Always <= 0,
/// with equality iff x == y.
double pixel_log_similarity(double x, double y, double scale);

/// Sum of pixel log-similarities over two patches of equal side.
double patch_log_similarity(const Patch& p, const Patch& q, double scale);

/// The k most similar patch centers within a window around a reference
/// pixel, ordered by descending log-similarity.
struct Neighborhood {
  int center_row = 0;
  int center_col = 0;
  std::vector<std::pair<int, int>> indices;  // (row, col) per selected center
  std::vector<double> log_sims;              // matching log-similarities
};

/// Exhaustively scores every patch centered in the window x window box
/// around (row, col), clipped to the grid, and keeps the k best. Ordering is
/// deterministic: descending log-similarity, the reference pixel first among
/// exact ties, then row-major candidate order.
Neighborhood find_similar(const ImageGrid& img, int row, int col, int patch_side, int window,
                          int k, double scale);

}  // namespace myriad
