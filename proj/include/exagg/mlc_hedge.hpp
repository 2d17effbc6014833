#pragma once

#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// Hedge with multiple learning rates for experts that report confidences.
//
// Round t: play p_k ~ I_k * (1 - e^{-eta_k}) * w_k on the active set, then
// update w_k <- w_k * exp(eta_k * I_k * (e^{-eta_k} * agg - l_k)).
//
// Weights only decay here (no conservation law), so they are kept in the
// log domain; exp(log_weights) never has to be materialized and stays
// finite for any horizon of practical size.
class MlcHedge final : public ConfidenceLearner {
 public:
  static constexpr double kMaxRate = 1.0;

  // Rates default to 1 when config.fixed_rates is unset.
  explicit MlcHedge(const LearnerConfig& config);

  std::size_t expert_count() const override { return log_weights_.size(); }
  MixtureVector predict(const ConfidenceVector& confidences) override;
  RoundOutcome update(const LossVector& losses,
                      const ConfidenceVector& confidences) override;
  const RegretLedger& ledger() const override { return ledger_; }

  const std::vector<double>& log_weights() const { return log_weights_; }
  const std::vector<double>& rates() const { return rates_; }
  // sum_t I_{k,t} * l_{k,t}, the quantity the regret bound is stated in.
  const std::vector<double>& weighted_loss() const { return weighted_loss_; }

 private:
  MixtureVector mixture_for(const ConfidenceVector& confidences) const;

  std::vector<double> log_weights_;
  std::vector<double> rates_;
  std::vector<double> weighted_loss_;
  RegretLedger ledger_;
};

}  // namespace exagg
