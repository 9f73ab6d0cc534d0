#include "myriad/likelihood.hpp"

#include <cmath>

#include "myriad/errors.hpp"

namespace myriad {

double objective_l(const WeightedSample& sample, const CauchyParams& params) {
  params.validate();
  return objective_q(sample, params.location, params.scale) - std::log(params.scale);
}

double objective_q(const WeightedSample& sample, double location, double scale) {
  const auto& x = sample.values();
  const auto& w = sample.weights();
  double q = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - location;
    q += w[i] * std::log(d * d + scale * scale);
  }
  return q;
}

double stat_s0(const WeightedSample& sample, const CauchyParams& params) {
  params.validate();
  const auto& x = sample.values();
  const auto& w = sample.weights();
  const double g2 = params.scale * params.scale;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - params.location;
    s += w[i] * g2 / (d * d + g2);
  }
  return s;
}

double stat_s1(const WeightedSample& sample, const CauchyParams& params) {
  params.validate();
  const auto& x = sample.values();
  const auto& w = sample.weights();
  const double g = params.scale;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - params.location;
    s += w[i] * g * d / (d * d + g * g);
  }
  return s;
}

Gradient gradient(const WeightedSample& sample, const CauchyParams& params) {
  params.validate();
  const auto& x = sample.values();
  const auto& w = sample.weights();
  const double g = params.scale;
  Gradient grad;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - params.location;
    const double den = d * d + g * g;
    grad.d_location += 2.0 * w[i] * (params.location - x[i]) / den;
    grad.d_scale += 2.0 * w[i] * g / den;
  }
  grad.d_scale -= 1.0 / g;
  return grad;
}

ScaleBracket scale_bracket(const WeightedSample& sample) {
  if (sample.size() < 3)
    throw PreconditionError("scale bracket requires at least three distinct values");
  ScaleBracket b;
  b.max_weight = sample.max_weight();
  if (!(b.max_weight < 0.5))
    throw PreconditionError("scale bracket requires every weight below 1/2");
  b.epsilon = std::sqrt(0.5 - b.max_weight);
  b.min_spacing = sample.min_spacing();
  b.lower = b.min_spacing * b.epsilon;
  b.upper = sample.span();
  return b;
}

}  // namespace myriad
