#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace myriad {

/// Sorted sample with positive weights summing to one. Raw data may arrive
/// unsorted and with repeated values; construction sorts and merges
/// duplicates by adding their weights, so values() is strictly increasing.
class WeightedSample {
 public:
  /// Uniform weights 1/n.
  static WeightedSample from_values(std::span<const double> values);
  static WeightedSample from_weighted(std::span<const double> values,
                                      std::span<const double> weights);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }

  double min_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }
  double span() const { return values_.back() - values_.front(); }
  double max_weight() const;
  /// Smallest gap between consecutive (distinct) values; requires size >= 2.
  double min_spacing() const;

 private:
  WeightedSample(std::vector<double> values, std::vector<double> weights)
      : values_(std::move(values)), weights_(std::move(weights)) {}

  std::vector<double> values_;
  std::vector<double> weights_;
};

}  // namespace myriad
