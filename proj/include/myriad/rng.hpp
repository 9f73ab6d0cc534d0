#pragma once

#include <cstdint>
#include <random>

namespace myriad {

/// Seedable random source. The generator is a Mersenne twister (mt19937_64);
/// uniform doubles are built from the top 53 bits of each draw, so a fixed
/// seed produces the same stream on every platform and in every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform draw in the open interval (0,1). Exact zeros (possible because
  /// only 53 bits are kept) are rejected and redrawn.
  double uniform01() {
    for (;;) {
      const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  /// Derives an independent stream seed from a master seed. SplitMix64 of
  /// (master + (stream+1) * golden-gamma); order-independent, so streams can
  /// be consumed in any order.
  static std::uint64_t split(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace myriad
