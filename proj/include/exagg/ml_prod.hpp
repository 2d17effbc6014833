#pragma once

#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// Prod with one fixed learning rate per expert.
//
// Round t: play p_k ~ eta_k * w_k, observe losses, then update each weight
// multiplicatively, w_k <- w_k * (1 + eta_k * (agg - l_k)). The total weight
// is conserved exactly, which is what drives the regret guarantee
//   R_k <= ln(1/w_{k,0}) / eta_k + eta_k * sum_t (agg_t - l_{k,t})^2
// for rates in (0, 1/2].
class MlProd final : public Learner {
 public:
  static constexpr double kMaxRate = 0.5;

  // Rates default to 1/2 when config.fixed_rates is unset.
  explicit MlProd(const LearnerConfig& config);

  // Bypasses the (0, 1/2] rate check. Exists so the bound checker can be
  // exercised against a deliberately mis-tuned instance; the guarantee does
  // not hold for rates above 1/2.
  static MlProd with_unchecked_rates(const LearnerConfig& config,
                                     std::vector<double> rates);

  std::size_t expert_count() const override { return weights_.size(); }
  MixtureVector predict() const override;
  RoundOutcome update(const LossVector& losses) override;
  const RegretLedger& ledger() const override { return ledger_; }

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& rates() const { return rates_; }

 private:
  struct unchecked_tag {};
  MlProd(const LearnerConfig& config, std::vector<double> rates,
         unchecked_tag);

  std::vector<double> weights_;
  std::vector<double> rates_;
  RegretLedger ledger_;
};

}  // namespace exagg
