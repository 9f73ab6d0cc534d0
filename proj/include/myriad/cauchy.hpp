#pragma once

#include <cstddef>
#include <vector>

#include "myriad/rng.hpp"

namespace myriad {

/// Location/scale pair of a Cauchy distribution. The scale is the half-width
/// at half-maximum of the density and must be strictly positive.
struct CauchyParams {
  double location = 0.0;
  double scale = 1.0;

  bool valid() const;
  /// Throws PreconditionError if the parameters are not finite with scale > 0.
  void validate() const;
};

double cauchy_pdf(const CauchyParams& params, double x);
double cauchy_cdf(const CauchyParams& params, double x);

/// Inverse CDF; u must lie in the open interval (0,1).
double cauchy_quantile(const CauchyParams& params, double u);

/// One draw by inversion sampling.
double sample_cauchy(const CauchyParams& params, Rng& rng);

/// count i.i.d. draws; deterministic for a fixed rng seed.
std::vector<double> sample_cauchy(const CauchyParams& params, Rng& rng, std::size_t count);

}  // namespace myriad
