#pragma once

#include <span>
#include <vector>

#include "myriad/estimators.hpp"
#include "myriad/image.hpp"

namespace myriad {

/// Kendall rank correlation without tie correction: tied pairs count toward
/// neither the concordant nor the discordant total, the denominator stays
/// n(n-1)/2. Sequences with all pairs tied give 0.
double kendall_tau(std::span<const double> x, std::span<const double> y);

/// Standardized tau, asymptotically standard normal for uncorrelated
/// sequences: z = 3 sqrt(n(n-1)) / sqrt(2(2n+5)) * tau.
double kendall_z(std::span<const double> x, std::span<const double> y);

/// Inverse standard normal CDF (Acklam's rational approximation, relative
/// error below 1.2e-9).
double normal_quantile(double p);

struct RegionTestConfig {
  int initial_block = 16;
  int min_block = 4;
  double alpha = 0.05;  // per-test two-sided significance level
  int min_regions = 5;  // stop shrinking once this many blocks are accepted
};

/// Rank-correlation test of the hypothesis that a square block contains no
/// structure. Pixel pairs are formed along four neighbor offsets
/// (horizontal, vertical, both diagonals); the block is rejected as soon as
/// one of the four |z| scores exceeds the two-sided critical value.
bool test_block_constant(const ImageGrid& img, int row0, int col0, int size,
                         const RegionTestConfig& cfg);

struct BlockRef {
  int row = 0;
  int col = 0;
  int size = 0;
};

struct ConstantRegionReport {
  std::vector<BlockRef> accepted_blocks;
  std::vector<double> per_block_gamma;
  double global_gamma = 0.0;  // arithmetic mean of per_block_gamma
};

/// Partitions the image into non-overlapping blocks, keeps those accepted as
/// constant, and halves the block size (initial_block -> min_block) until
/// min_regions are found or the smallest size has been tried. A joint fit
/// runs on each accepted block; the location estimates are discarded and the
/// scale estimates averaged. Throws NoConstantRegionsError when nothing
/// usable is accepted at the smallest size.
ConstantRegionReport estimate_global_gamma(const ImageGrid& img,
                                           const RegionTestConfig& cfg = {},
                                           const SolverConfig& solver = {});

}  // namespace myriad
