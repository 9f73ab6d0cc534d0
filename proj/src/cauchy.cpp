#include "myriad/cauchy.hpp"

#include <cmath>

#include "myriad/errors.hpp"

namespace myriad {

bool CauchyParams::valid() const {
  return std::isfinite(location) && std::isfinite(scale) && scale > 0.0;
}

void CauchyParams::validate() const {
  if (!valid()) throw PreconditionError("invalid Cauchy parameters: scale must be finite and > 0");
}

double cauchy_pdf(const CauchyParams& params, double x) {
  params.validate();
  const double t = (x - params.location) / params.scale;
  return 1.0 / (M_PI * params.scale * (t * t + 1.0));
}

double cauchy_cdf(const CauchyParams& params, double x) {
  params.validate();
  return std::atan((x - params.location) / params.scale) / M_PI + 0.5;
}

double cauchy_quantile(const CauchyParams& params, double u) {
  params.validate();
  if (!(u > 0.0 && u < 1.0)) throw PreconditionError("quantile argument must lie in (0,1)");
  return params.location + params.scale * std::tan(M_PI * (u - 0.5));
}

double sample_cauchy(const CauchyParams& params, Rng& rng) {
  return cauchy_quantile(params, rng.uniform01());
}

std::vector<double> sample_cauchy(const CauchyParams& params, Rng& rng, std::size_t count) {
  params.validate();
  if (count == 0) throw PreconditionError("sample count must be >= 1");
  std::vector<double> draws(count);
  for (double& d : draws) d = sample_cauchy(params, rng);
  return draws;
}

}  // namespace myriad
