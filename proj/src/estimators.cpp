#include "myriad/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "myriad/errors.hpp"

namespace myriad {

namespace {

void check_joint_preconditions(const WeightedSample& sample) {
  if (sample.size() == 1)
    throw DegenerateSampleError("all sample values are equal; scale is ill-posed");
  if (sample.size() < 3)
    throw PreconditionError("joint estimation requires at least three distinct values");
  if (!(sample.max_weight() < 0.5))
    throw PreconditionError("joint estimation requires every weight below 1/2");
}

double median_of(std::vector<double>& v) {
  const std::size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double m = v[n / 2];
  if (n % 2 == 0) {
    const double lo = *std::max_element(v.begin(), v.begin() + n / 2);
    m = 0.5 * (lo + m);
  }
  return m;
}

double rel_step(const CauchyParams& from, const CauchyParams& to) {
  return std::hypot(to.location - from.location, to.scale - from.scale) /
         std::hypot(from.location, from.scale);
}

// Shared driver: `update` maps the current iterate to the next one. The
// candidate step is measured before committing; once it falls below the
// tolerance the current iterate is final.
template <typename Update>
EstimateResult run_fixed_point(const WeightedSample& sample, CauchyParams state,
                               const SolverConfig& cfg, Update update, IterationTrace* trace) {
  if (!(cfg.rel_tolerance > 0.0)) throw PreconditionError("rel_tolerance must be positive");
  if (cfg.max_iterations < 1) throw PreconditionError("max_iterations must be >= 1");
  if (trace) trace->push_back(state);

  EstimateResult result;
  for (int r = 0; r < cfg.max_iterations; ++r) {
    const CauchyParams next = update(state);
    if (rel_step(state, next) < cfg.rel_tolerance) {
      result.converged = true;
      result.iterations = r;
      break;
    }
    state = next;
    if (trace) trace->push_back(state);
    result.iterations = r + 1;
  }
  result.params = state;
  result.final_objective = objective_l(sample, state);
  return result;
}

}  // namespace

double weighted_median(const WeightedSample& sample) {
  const auto& x = sample.values();
  const auto& w = sample.weights();
  double cum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cum += w[i];
    if (cum >= 0.5 - 1e-12) {
      if (std::abs(cum - 0.5) <= 1e-12 && i + 1 < x.size()) return 0.5 * (x[i] + x[i + 1]);
      return x[i];
    }
  }
  return x.back();
}

double min_q_location(const WeightedSample& sample, double scale) {
  if (!(scale > 0.0)) throw PreconditionError("scale must be positive");
  const auto& x = sample.values();
  double best = x.front();
  double best_q = objective_q(sample, best, scale);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double q = objective_q(sample, x[i], scale);
    if (q < best_q) {
      best_q = q;
      best = x[i];
    }
  }
  return best;
}

double hodges_lehmann_scale(const WeightedSample& sample) {
  const auto& x = sample.values();
  if (x.size() < 2) throw PreconditionError("scale initialization requires n >= 2");
  if (sample.span() <= 0.0) throw DegenerateSampleError("zero sample range");
  std::vector<double> half_diffs;
  half_diffs.reserve(x.size() * (x.size() - 1) / 2);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      half_diffs.push_back(0.5 * (x[j] - x[i]));
  return median_of(half_diffs);
}

namespace {

CauchyParams default_joint_init(const WeightedSample& sample,
                                const std::optional<CauchyParams>& init) {
  CauchyParams p;
  p.location = init ? init->location : weighted_median(sample);
  p.scale = init && init->scale > 0.0 ? init->scale : hodges_lehmann_scale(sample);
  if (!std::isfinite(p.location) || !(p.scale > 0.0))
    throw PreconditionError("invalid initialization");
  if (init && !(p.location >= sample.min_value() && p.location <= sample.max_value()))
    throw PreconditionError("initial location must lie within the sample range");
  return p;
}

}  // namespace

EstimateResult estimate_joint_gmf(const WeightedSample& sample, const SolverConfig& cfg,
                                  const std::optional<CauchyParams>& init,
                                  IterationTrace* trace) {
  check_joint_preconditions(sample);
  const CauchyParams start = default_joint_init(sample, init);
  return run_fixed_point(sample, start, cfg,
                         [&](const CauchyParams& p) {
                           const double s0 = stat_s0(sample, p);
                           const double s1 = stat_s1(sample, p);
                           CauchyParams next;
                           next.location = p.location + p.scale * s1 / s0;
                           next.scale = p.scale * std::sqrt((1.0 - s0) / s0);
                           return next;
                         },
                         trace);
}

EstimateResult estimate_joint_fast(const WeightedSample& sample, const SolverConfig& cfg,
                                   const std::optional<CauchyParams>& init,
                                   IterationTrace* trace) {
  check_joint_preconditions(sample);
  const CauchyParams start = default_joint_init(sample, init);
  return run_fixed_point(sample, start, cfg,
                         [&](const CauchyParams& p) {
                           const double s0 = stat_s0(sample, p);
                           const double s1 = stat_s1(sample, p);
                           const double den = s0 * s0 + s1 * s1;
                           CauchyParams next;
                           next.location = p.location + p.scale * s1 / den;
                           next.scale = p.scale * (s0 / den - 1.0);
                           return next;
                         },
                         trace);
}

EstimateResult estimate_location_mf(const WeightedSample& sample, double scale,
                                    const SolverConfig& cfg, std::optional<double> init,
                                    IterationTrace* trace) {
  if (sample.size() < 2)
    throw PreconditionError("location estimation requires at least two distinct values");
  if (!(scale > 0.0)) throw PreconditionError("scale must be positive");
  double a0;
  if (init) {
    a0 = *init;
    if (!(a0 > sample.min_value() && a0 < sample.max_value()))
      throw PreconditionError("initial location must lie strictly inside the sample range");
  } else {
    a0 = min_q_location(sample, scale);
  }
  return run_fixed_point(sample, CauchyParams{a0, scale}, cfg,
                         [&](const CauchyParams& p) {
                           const double s0 = stat_s0(sample, p);
                           const double s1 = stat_s1(sample, p);
                           return CauchyParams{p.location + p.scale * s1 / s0, p.scale};
                         },
                         trace);
}

EstimateResult estimate_scale(const WeightedSample& sample, double location,
                              const SolverConfig& cfg, std::optional<double> init,
                              IterationTrace* trace) {
  const ScaleBracket bracket = scale_bracket(sample);  // also checks n>=3, w_max<1/2
  if (!(location > sample.min_value() && location < sample.max_value()))
    throw PreconditionError("location must lie strictly inside the sample range");
  double g0;
  if (init) {
    g0 = *init;
    if (!(g0 > 0.0 && g0 < sample.span()))
      throw PreconditionError("initial scale must lie in (0, x_n - x_1)");
  } else {
    g0 = std::clamp(hodges_lehmann_scale(sample), bracket.lower, bracket.upper);
  }
  return run_fixed_point(sample, CauchyParams{location, g0}, cfg,
                         [&](const CauchyParams& p) {
                           const double s0 = stat_s0(sample, p);
                           return CauchyParams{p.location,
                                               p.scale * std::sqrt((1.0 - s0) / s0)};
                         },
                         trace);
}

}  // namespace myriad
