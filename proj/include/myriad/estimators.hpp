#pragma once

#include <optional>
#include <vector>

#include "myriad/cauchy.hpp"
#include "myriad/likelihood.hpp"
#include "myriad/weighted_sample.hpp"

namespace myriad {

struct SolverConfig {
  double rel_tolerance = 1e-6;
  int max_iterations = 1000;
};

/// Result of a fixed-point solve. When converged is set, applying one more
/// update to params moves it by less than rel_tolerance in relative norm;
/// the solver evaluates that candidate step and stops without applying it,
/// so iterations counts the updates actually taken.
struct EstimateResult {
  CauchyParams params;
  int iterations = 0;
  bool converged = false;
  double final_objective = 0.0;
};

/// Applied iterates, starting with the initial point.
using IterationTrace = std::vector<CauchyParams>;

/// Weighted sample median: the value where the cumulative weight first
/// exceeds 1/2; if it hits 1/2 exactly, the midpoint to the next value.
double weighted_median(const WeightedSample& sample);

/// Sample value minimizing Q(.) at the given scale; ties break toward the
/// smaller value.
double min_q_location(const WeightedSample& sample, double scale);

/// Scale estimate from pairwise dispersion: the median over pairs i<j of
/// |x_i - x_j| / 2 (Hodges-Lehmann style). The difference of two independent
/// Cauchy variables with scale g has scale 2g, which makes this consistent.
double hodges_lehmann_scale(const WeightedSample& sample);

/// Joint location/scale fit by the generalized myriad filter updates
///   a <- a + g * s1/s0,   g^2 <- g^2 * (1-s0)/s0.
/// Requires n >= 3 and all weights < 1/2; converges to the unique minimizer
/// of the objective from any start. Defaults: median / Hodges-Lehmann init.
EstimateResult estimate_joint_gmf(const WeightedSample& sample, const SolverConfig& cfg = {},
                                  const std::optional<CauchyParams>& init = {},
                                  IterationTrace* trace = nullptr);

/// Joint fit by the accelerated updates
///   a <- a + g * s1/(s0^2+s1^2),   g <- g * (s0/(s0^2+s1^2) - 1);
/// same preconditions and limit as estimate_joint_gmf, roughly three times
/// fewer iterations.
EstimateResult estimate_joint_fast(const WeightedSample& sample, const SolverConfig& cfg = {},
                                   const std::optional<CauchyParams>& init = {},
                                   IterationTrace* trace = nullptr);

/// Location-only fit (classical myriad filter) at a fixed scale. Converges
/// to a critical point of Q; the limit depends on the start when Q is
/// multimodal. Default init: min_q_location.
EstimateResult estimate_location_mf(const WeightedSample& sample, double scale,
                                    const SolverConfig& cfg = {},
                                    std::optional<double> init = {},
                                    IterationTrace* trace = nullptr);

/// Scale-only fit at a fixed location inside the sample range. The iterates
/// are monotone toward the unique root of s0 = 1/2. Default init:
/// hodges_lehmann_scale clamped into the guaranteed bracket.
EstimateResult estimate_scale(const WeightedSample& sample, double location,
                              const SolverConfig& cfg = {},
                              std::optional<double> init = {},
                              IterationTrace* trace = nullptr);

}  // namespace myriad
