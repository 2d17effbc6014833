#include "exagg/adapt_ml_prod.hpp"

#include <algorithm>
#include <cmath>

namespace exagg {

AdaptMlProd::AdaptMlProd(const LearnerConfig& config)
    : weights_(config.resolved_weights()), ledger_(config.expert_count) {
  if (config.fixed_rates.has_value()) {
    throw ConfigMismatch(
        "Adapt-ML-Prod has no rate parameter; the rate rule is the algorithm");
  }
  const std::size_t K = weights_.size();
  gamma_.resize(K);
  rates_.resize(K);
  cumulative_sq_.assign(K, 1.0);
  weighted_sq_.assign(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    gamma_[k] = std::log(1.0 / weights_[k]);
    rates_[k] = std::min(0.5, std::sqrt(gamma_[k] / cumulative_sq_[k]));
  }
  prev_rates_ = rates_;
  initial_rates_ = rates_;
}

MixtureVector AdaptMlProd::predict() const {
  if (expert_count() == 1) return MixtureVector::point_mass(1, 0);
  std::vector<double> scores(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    scores[k] = rates_[k] * weights_[k];
  }
  return MixtureVector::normalized(std::move(scores));
}

RoundOutcome AdaptMlProd::update(const LossVector& losses) {
  if (losses.size() != expert_count()) {
    throw ConfigMismatch("loss vector size does not match expert count");
  }
  RoundOutcome outcome = make_outcome(predict(), losses);
  ledger_.record(outcome, losses.scale());
  if (expert_count() == 1) return outcome;

  prev_rates_ = rates_;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const double r = outcome.instantaneous_regrets[k];
    weighted_sq_[k] += prev_rates_[k] * r * r;
    cumulative_sq_[k] += r * r;
    rates_[k] = std::min(0.5, std::sqrt(gamma_[k] / cumulative_sq_[k]));
    ratio_cost_ += prev_rates_[k] / rates_[k] - 1.0;
    weights_[k] = std::pow(weights_[k] * (1.0 + prev_rates_[k] * r),
                           rates_[k] / prev_rates_[k]);
  }
  return outcome;
}

AdaptRateStats AdaptMlProd::rate_stats() const {
  return AdaptRateStats{initial_rates_, rates_, weighted_sq_, ratio_cost_};
}

}  // namespace exagg
