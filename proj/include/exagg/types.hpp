#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exagg/errors.hpp"

namespace exagg {

// Losses for one round, one entry per expert, affinely rescaled into [0,1].
// The pre-rescale range (lo, hi) is kept so that regrets can be reported in
// original units as well (regret_original = regret * (hi - lo)).
class LossVector {
 public:
  // Values already in the canonical range [0,1].
  explicit LossVector(std::vector<double> values);

  // Raw values in [lo, hi]; rescaled to (v - lo) / (hi - lo) at ingestion.
  LossVector(std::vector<double> raw_values, double lo, double hi);

  // Values already rescaled, but tagged with the range they came from.
  static LossVector from_rescaled(std::vector<double> values, double lo,
                                  double hi);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::vector<double>& values() const { return values_; }
  double range_lo() const { return lo_; }
  double range_hi() const { return hi_; }
  double scale() const { return hi_ - lo_; }

 private:
  LossVector() = default;
  void validate_and_clamp();

  std::vector<double> values_;
  double lo_ = 0.0;
  double hi_ = 1.0;
};

// Per-round confidences I_k in [0,1]. I_k = 0 marks a sleeping expert; the
// active set {k : I_k > 0} must never be empty.
class ConfidenceVector {
 public:
  explicit ConfidenceVector(std::vector<double> values);

  static ConfidenceVector all_ones(std::size_t experts);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::vector<double>& values() const { return values_; }
  bool active(std::size_t k) const { return values_[k] > 0.0; }

 private:
  std::vector<double> values_;
};

// Nonnegative weights over experts summing to one.
class MixtureVector {
 public:
  explicit MixtureVector(std::vector<double> weights);

  static MixtureVector uniform(std::size_t experts);
  static MixtureVector point_mass(std::size_t experts, std::size_t k);
  // Divides by the (strictly positive) total.
  static MixtureVector normalized(std::vector<double> raw);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t k) const { return weights_[k]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  MixtureVector() = default;

  std::vector<double> weights_;
};

// What one predict/update round produced: the mixture that was played, the
// aggregate loss it incurred, and the instantaneous regrets r_k = agg - l_k.
struct RoundOutcome {
  MixtureVector mixture;
  double aggregate_loss = 0.0;
  std::vector<double> instantaneous_regrets;
};

// Builds the outcome for a mixture played against a loss vector.
RoundOutcome make_outcome(MixtureVector mixture, const LossVector& losses);

// Running per-expert regret statistics, accumulated in rescaled units.
class RegretLedger {
 public:
  explicit RegretLedger(std::size_t experts);

  // Confidences implicitly all one.
  void record(const RoundOutcome& outcome, double scale = 1.0);
  void record(const RoundOutcome& outcome, const ConfidenceVector& confidences,
              double scale = 1.0);

  std::size_t expert_count() const { return cumulative_regret_.size(); }
  std::size_t round_count() const { return round_count_; }

  // R_k = sum_t (agg_t - l_{k,t})
  const std::vector<double>& cumulative_regret() const {
    return cumulative_regret_;
  }
  // sum_t (agg_t - l_{k,t})^2
  const std::vector<double>& squared_excess() const { return squared_excess_; }
  // Positive part: sum of r_{k,t} over rounds with r >= 0.
  const std::vector<double>& positive_part() const { return positive_part_; }
  // Negative part: sum of -r_{k,t} over rounds with r <= 0 (the excess-loss
  // rounds l_{k,t} >= agg_t).
  const std::vector<double>& negative_part() const { return negative_part_; }
  // sum_t I_{k,t} r_{k,t}; equals cumulative_regret when I is always 1.
  const std::vector<double>& confidence_regret() const {
    return confidence_regret_;
  }
  // Regret in pre-rescale units: sum_t r_{k,t} * scale_t.
  const std::vector<double>& cumulative_regret_original() const {
    return cumulative_regret_original_;
  }

 private:
  std::vector<double> cumulative_regret_;
  std::vector<double> squared_excess_;
  std::vector<double> positive_part_;
  std::vector<double> negative_part_;
  std::vector<double> confidence_regret_;
  std::vector<double> cumulative_regret_original_;
  std::size_t round_count_ = 0;
};

// Construction parameters shared by all learners.
struct LearnerConfig {
  std::size_t expert_count = 0;
  // Empty means uniform 1/K. Must be strictly positive and sum to one.
  std::vector<double> initial_weights;
  // Fixed learning rates for ML-Prod (range (0, 1/2]) and MLC-Hedge
  // (range (0, 1]). The adaptive learners take no rate parameter.
  std::optional<std::vector<double>> fixed_rates;
  std::optional<std::uint64_t> seed;

  // Validates and returns the initial weights (uniform when unset).
  std::vector<double> resolved_weights() const;
  // Validates and returns the fixed rates, defaulting to max_rate when unset.
  std::vector<double> resolved_rates(double max_rate) const;
};

}  // namespace exagg
