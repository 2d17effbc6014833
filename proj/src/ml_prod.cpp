#include "exagg/ml_prod.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace exagg {

MlProd::MlProd(const LearnerConfig& config)
    : MlProd(config, config.resolved_rates(kMaxRate), unchecked_tag{}) {}

MlProd MlProd::with_unchecked_rates(const LearnerConfig& config,
                                    std::vector<double> rates) {
  if (rates.size() != config.expert_count) {
    throw ConfigMismatch("rates size does not match expert_count");
  }
  for (double eta : rates) {
    if (!(eta > 0.0) || !(eta < 1.0)) {
      throw RateOutOfRange("unchecked rates must still lie in (0, 1) so the "
                           "update factor stays positive");
    }
  }
  return MlProd(config, std::move(rates), unchecked_tag{});
}

MlProd::MlProd(const LearnerConfig& config, std::vector<double> rates,
               unchecked_tag)
    : weights_(config.resolved_weights()),
      rates_(std::move(rates)),
      ledger_(config.expert_count) {}

MixtureVector MlProd::predict() const {
  std::vector<double> scores(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    scores[k] = rates_[k] * weights_[k];
  }
  return MixtureVector::normalized(std::move(scores));
}

RoundOutcome MlProd::update(const LossVector& losses) {
  if (losses.size() != expert_count()) {
    throw ConfigMismatch("loss vector size does not match expert count");
  }
  RoundOutcome outcome = make_outcome(predict(), losses);
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    weights_[k] *= 1.0 + rates_[k] * outcome.instantaneous_regrets[k];
  }
  ledger_.record(outcome, losses.scale());
  return outcome;
}

}  // namespace exagg
