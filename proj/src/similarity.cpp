#include "myriad/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "myriad/errors.hpp"

namespace myriad {

Patch extract_patch(const ImageGrid& img, int row, int col, int side) {
  if (side < 1 || side % 2 == 0) throw PreconditionError("patch side must be odd and >= 1");
  Patch p;
  p.center_row = row;
  p.center_col = col;
  p.side = side;
  p.values.reserve(static_cast<std::size_t>(side) * side);
  const int h = side / 2;
  for (int dr = -h; dr <= h; ++dr)
    for (int dc = -h; dc <= h; ++dc)
      p.values.push_back(img.at_mirror(row + dr, col + dc));
  return p;
}

double pixel_log_similarity(double x, double y, double scale) {
  if (!(scale > 0.0)) throw PreconditionError("similarity scale must be positive");
  const double d = (x - y) / (2.0 * scale);
  return -2.0 * std::log1p(d * d);
}

double patch_log_similarity(const Patch& p, const Patch& q, double scale) {
  if (p.side != q.side) throw SideMismatchError("patch sides differ");
  if (!(scale > 0.0)) throw PreconditionError("similarity scale must be positive");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const double d = (p.values[i] - q.values[i]) / (2.0 * scale);
    sum -= 2.0 * std::log1p(d * d);
  }
  return sum;
}

Neighborhood find_similar(const ImageGrid& img, int row, int col, int patch_side, int window,
                          int k, double scale) {
  if (window < 1 || window % 2 == 0) throw PreconditionError("window must be odd and >= 1");
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (static_cast<long long>(k) > static_cast<long long>(window) * window)
    throw PreconditionError("k must not exceed window^2");

  const Patch ref = extract_patch(img, row, col, patch_side);
  const int hw = window / 2;
  const int r0 = std::max(0, row - hw), r1 = std::min(img.height() - 1, row + hw);
  const int c0 = std::max(0, col - hw), c1 = std::min(img.width() - 1, col + hw);

  struct Candidate {
    double log_sim;
    int row, col;
    bool is_ref;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(r1 - r0 + 1) * (c1 - c0 + 1));
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) {
      const Patch cand = extract_patch(img, r, c, patch_side);
      candidates.push_back(
          {patch_log_similarity(ref, cand, scale), r, c, r == row && c == col});
    }
  if (static_cast<int>(candidates.size()) < k)
    throw PreconditionError("window contains fewer candidates than requested");

  const auto better = [&](const Candidate& a, const Candidate& b) {
    if (a.log_sim != b.log_sim) return a.log_sim > b.log_sim;
    if (a.is_ref != b.is_ref) return a.is_ref;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  };
  std::nth_element(candidates.begin(), candidates.begin() + (k - 1), candidates.end(), better);
  std::sort(candidates.begin(), candidates.begin() + k, better);

  Neighborhood out;
  out.center_row = row;
  out.center_col = col;
  out.indices.reserve(k);
  out.log_sims.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.indices.emplace_back(candidates[i].row, candidates[i].col);
    out.log_sims.push_back(candidates[i].log_sim);
  }
  return out;
}

}  // namespace myriad
