#pragma once

#include "myriad/cauchy.hpp"

namespace myriad {

/// E[1/(1+X^2)] for X Cauchy-distributed.
double expected_y(const CauchyParams& params);

/// E[X/(1+X^2)] for X Cauchy-distributed.
double expected_z(const CauchyParams& params);

/// Population means of the s0/s1 statistics when the data follow
/// true_params and the statistics are evaluated at iterate:
///   m0 = g_r (g + g_r) / ((a - a_r)^2 + (g + g_r)^2)
///   m1 = g_r (a - a_r) / ((a - a_r)^2 + (g + g_r)^2)
struct PopulationStats {
  double m0 = 0.0;
  double m1 = 0.0;
};

PopulationStats population_stats(const CauchyParams& true_params, const CauchyParams& iterate);

/// State of the mean-field recursion obtained by replacing s0/s1 with their
/// population means in the joint update. Its unique fixed point is the true
/// parameter pair, approached linearly with rate
/// max(1/2, g / (g + scale_0)).
struct IdealizedState {
  double location = 0.0;
  double scale = 1.0;
  CauchyParams true_params;
};

IdealizedState idealized_step(const IdealizedState& state);

}  // namespace myriad
