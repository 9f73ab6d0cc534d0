#include "myriad/weighted_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "myriad/errors.hpp"

namespace myriad {

namespace {

// Values within 1e-12 * max(1,|x|) of the group representative are treated
// as one sample with summed weight.
bool same_value(double rep, double x) {
  return std::abs(x - rep) <= 1e-12 * std::max(1.0, std::abs(rep));
}

}  // namespace

WeightedSample WeightedSample::from_values(std::span<const double> values) {
  const std::vector<double> w(values.size(),
                              values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size()));
  return from_weighted(values, w);
}

WeightedSample WeightedSample::from_weighted(std::span<const double> values,
                                             std::span<const double> weights) {
  if (values.empty()) throw PreconditionError("sample must contain at least one value");
  if (values.size() != weights.size())
    throw PreconditionError("values and weights must have equal length");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw PreconditionError("sample values must be finite");
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
      throw PreconditionError("weights must be positive and finite");
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> v, w;
  v.reserve(values.size());
  w.reserve(values.size());
  for (std::size_t idx : order) {
    if (!v.empty() && same_value(v.back(), values[idx])) {
      w.back() += weights[idx];
    } else {
      v.push_back(values[idx]);
      w.push_back(weights[idx]);
    }
  }

  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& wi : w) wi /= total;
  return WeightedSample(std::move(v), std::move(w));
}

double WeightedSample::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

double WeightedSample::min_spacing() const {
  if (values_.size() < 2) throw PreconditionError("min_spacing requires at least two values");
  double d = values_[1] - values_[0];
  for (std::size_t i = 2; i < values_.size(); ++i)
    d = std::min(d, values_[i] - values_[i - 1]);
  return d;
}

}  // namespace myriad
