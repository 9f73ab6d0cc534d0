#include "myriad/montecarlo.hpp"

#include <cmath>

#include "myriad/cauchy.hpp"
#include "myriad/errors.hpp"
#include "myriad/rng.hpp"

namespace myriad {

namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
};

template <typename Get>
Moments moments(const std::vector<TrialRecord>& records, Get get) {
  double sum = 0.0;
  for (const TrialRecord& t : records) sum += get(t);
  const double mean = sum / static_cast<double>(records.size());
  double sq = 0.0;
  for (const TrialRecord& t : records) {
    const double d = get(t) - mean;
    sq += d * d;
  }
  return {mean, std::sqrt(sq / static_cast<double>(records.size() - 1))};
}

}  // namespace

StudyResult run_study(double location, double scale, int sample_size, int trials,
                      std::uint64_t seed, const SolverConfig& solver) {
  if (sample_size < 3) throw PreconditionError("study needs sample_size >= 3");
  if (trials < 2) throw PreconditionError("study needs at least two trials");
  const CauchyParams truth{location, scale};
  truth.validate();

  StudyResult result;
  result.records.reserve(trials);
  for (int k = 0; k < trials; ++k) {
    Rng rng(Rng::split(seed, static_cast<std::uint64_t>(k)));
    const std::vector<double> draws =
        sample_cauchy(truth, rng, static_cast<std::size_t>(sample_size));
    const WeightedSample sample = WeightedSample::from_values(draws);

    // Shared initialization so the two algorithms run a paired comparison.
    const CauchyParams init{weighted_median(sample), hodges_lehmann_scale(sample)};
    const EstimateResult fit_gmf = estimate_joint_gmf(sample, solver, init);
    const EstimateResult fit_fast = estimate_joint_fast(sample, solver, init);

    result.records.push_back({k, fit_gmf.params.location, fit_gmf.params.scale,
                              fit_gmf.iterations, fit_fast.iterations});
  }

  StudySummary& s = result.summary;
  const auto iter1 = moments(result.records, [](const TrialRecord& t) {
    return static_cast<double>(t.iterations_gmf);
  });
  const auto iter4 = moments(result.records, [](const TrialRecord& t) {
    return static_cast<double>(t.iterations_fast);
  });
  const auto a = moments(result.records, [](const TrialRecord& t) { return t.a_hat; });
  const auto g = moments(result.records, [](const TrialRecord& t) { return t.gamma_hat; });
  s.mean_iter_gmf = iter1.mean;
  s.sd_iter_gmf = iter1.sd;
  s.mean_iter_fast = iter4.mean;
  s.sd_iter_fast = iter4.sd;
  s.mean_a = a.mean;
  s.sd_a = a.sd;
  s.mean_gamma = g.mean;
  s.sd_gamma = g.sd;
  double se_a = 0.0, se_g = 0.0;
  for (const TrialRecord& t : result.records) {
    se_a += (t.a_hat - location) * (t.a_hat - location);
    se_g += (t.gamma_hat - scale) * (t.gamma_hat - scale);
  }
  s.mse_a = se_a / static_cast<double>(trials);
  s.mse_gamma = se_g / static_cast<double>(trials);
  s.trials = trials;
  s.sample_size = sample_size;
  s.true_location = location;
  s.true_scale = scale;
  return result;
}

}  // namespace myriad
