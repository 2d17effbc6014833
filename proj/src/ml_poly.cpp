#include "exagg/ml_poly.hpp"

#include <utility>

namespace exagg {

MlPoly::MlPoly(const LearnerConfig& config)
    : regrets_(config.resolved_weights().size(), 0.0),
      rates_(config.expert_count, 1.0),
      cumulative_sq_(config.expert_count, 0.0),
      ledger_(config.expert_count) {
  if (config.fixed_rates.has_value()) {
    throw ConfigMismatch(
        "ML-Poly has no rate parameter; the rate rule is the algorithm");
  }
  if (!config.initial_weights.empty()) {
    throw ConfigMismatch(
        "ML-Poly starts from the zero regret vector and takes no prior");
  }
}

MixtureVector MlPoly::predict() const {
  std::vector<double> scores(regrets_.size());
  double total = 0.0;
  for (std::size_t k = 0; k < regrets_.size(); ++k) {
    scores[k] = regrets_[k] > 0.0 ? rates_[k] * regrets_[k] : 0.0;
    total += scores[k];
  }
  if (total <= 0.0) return MixtureVector::uniform(regrets_.size());
  return MixtureVector::normalized(std::move(scores));
}

RoundOutcome MlPoly::update(const LossVector& losses) {
  if (losses.size() != expert_count()) {
    throw ConfigMismatch("loss vector size does not match expert count");
  }
  RoundOutcome outcome = make_outcome(predict(), losses);
  for (std::size_t k = 0; k < regrets_.size(); ++k) {
    const double r = outcome.instantaneous_regrets[k];
    regrets_[k] += r;
    cumulative_sq_[k] += r * r;
    rates_[k] = 1.0 / (1.0 + cumulative_sq_[k]);
  }
  ledger_.record(outcome, losses.scale());
  return outcome;
}

}  // namespace exagg
