#pragma once

#include "myriad/cauchy.hpp"
#include "myriad/weighted_sample.hpp"

namespace myriad {

/// Weighted negative log-likelihood of a Cauchy sample (up to the constant
/// log(pi)):  L(a,g) = sum_i w_i log((x_i-a)^2 + g^2) - log(g).
double objective_l(const WeightedSample& sample, const CauchyParams& params);

/// Reduced objective used when the scale is fixed:
/// Q(a) = L(a,g) + log(g) = sum_i w_i log((x_i-a)^2 + g^2).
double objective_q(const WeightedSample& sample, double location, double scale);

/// s0 = sum_i w_i g^2 / ((x_i-a)^2 + g^2), in (0,1].
/// Relates to the gradient by s0 = 1/2 + (g/2) dL/dg.
double stat_s0(const WeightedSample& sample, const CauchyParams& params);

/// s1 = sum_i w_i g (x_i-a) / ((x_i-a)^2 + g^2), in [-1/2, 1/2].
/// Relates to the gradient by s1 = -(g/2) dL/da.
double stat_s1(const WeightedSample& sample, const CauchyParams& params);

struct Gradient {
  double d_location = 0.0;
  double d_scale = 0.0;
};

/// Analytic gradient of objective_l.
Gradient gradient(const WeightedSample& sample, const CauchyParams& params);

/// Interval guaranteed to contain the scale that solves s0 = 1/2 for any
/// fixed location inside the sample range. Requires n >= 3 and every weight
/// below 1/2.
struct ScaleBracket {
  double max_weight = 0.0;
  double epsilon = 0.0;      // sqrt(1/2 - max_weight)
  double min_spacing = 0.0;  // smallest gap between consecutive values
  double lower = 0.0;        // min_spacing * epsilon
  double upper = 0.0;        // x_n - x_1
};

ScaleBracket scale_bracket(const WeightedSample& sample);

}  // namespace myriad
