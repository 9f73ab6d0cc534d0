#pragma once

#include <cstdint>
#include <vector>

#include "myriad/estimators.hpp"

namespace myriad {

struct TrialRecord {
  int trial_index = 0;
  double a_hat = 0.0;
  double gamma_hat = 0.0;
  int iterations_gmf = 0;
  int iterations_fast = 0;
};

struct StudySummary {
  double mean_iter_gmf = 0.0, sd_iter_gmf = 0.0;
  double mean_iter_fast = 0.0, sd_iter_fast = 0.0;
  double mean_a = 0.0, sd_a = 0.0;
  double mean_gamma = 0.0, sd_gamma = 0.0;
  double mse_a = 0.0, mse_gamma = 0.0;
  int trials = 0;
  int sample_size = 0;
  double true_location = 0.0;
  double true_scale = 0.0;
};

struct StudyResult {
  std::vector<TrialRecord> records;
  StudySummary summary;
};

/// Repeated paired estimation benchmark: each trial draws sample_size i.i.d.
/// values, fits them with both joint algorithms from the shared
/// median / Hodges-Lehmann initialization, and records both iteration counts
/// plus the (gmf) estimate. Per-trial seeds derive from the master seed via
/// Rng::split, so trials are reproducible independently of execution order.
/// Standard deviations use the N-1 denominator; MSE averages the squared
/// error against the true parameters.
StudyResult run_study(double location, double scale, int sample_size, int trials,
                      std::uint64_t seed, const SolverConfig& solver = {});

}  // namespace myriad
