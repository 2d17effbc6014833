#pragma once

#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// Snapshot of the rate bookkeeping needed to evaluate the time-varying
// regret bound (initial and current rates, the rate-weighted squared
// excess losses, and the accumulated cost of the rate decreases).
struct AdaptRateStats {
  std::vector<double> initial_rates;
  std::vector<double> current_rates;
  // sum_t eta_{k,t-1} * r_{k,t}^2 per expert
  std::vector<double> weighted_squared_excess;
  // sum over experts and rounds of (eta_{k,t-1} / eta_{k,t} - 1)
  double rate_ratio_cost = 0.0;
};

// Prod with per-expert learning rates that decrease with the accumulated
// squared excess loss:
//
//   eta_{k,t} = min{ 1/2, sqrt(gamma_k / (1 + sum_{s<=t} r_{k,s}^2)) },
//   gamma_k  = ln(1/w_{k,0})  (= ln K for uniform initial weights).
//
// The weight update raises the usual Prod factor to the power
// eta_{k,t}/eta_{k,t-1} <= 1 so that the per-expert lower bound on ln w_k
// telescopes even though the rates change over time.
//
// A single expert (K = 1) short-circuits to the point mass: gamma would be
// zero and the rate rule degenerate, and the point mass is the only valid
// mixture anyway.
class AdaptMlProd final : public Learner {
 public:
  explicit AdaptMlProd(const LearnerConfig& config);

  std::size_t expert_count() const override { return weights_.size(); }
  MixtureVector predict() const override;
  RoundOutcome update(const LossVector& losses) override;
  const RegretLedger& ledger() const override { return ledger_; }

  const std::vector<double>& weights() const { return weights_; }
  // eta_{k,t}: the rates the next round will play with.
  const std::vector<double>& rates() const { return rates_; }
  // eta_{k,t-1}: the rates the last played round used.
  const std::vector<double>& previous_rates() const { return prev_rates_; }
  // 1 + sum_{s<=t} r_{k,s}^2 (the rate-rule denominators)
  const std::vector<double>& cumulative_sq() const { return cumulative_sq_; }
  AdaptRateStats rate_stats() const;

 private:
  std::vector<double> weights_;
  std::vector<double> gamma_;        // ln(1/w_{k,0})
  std::vector<double> rates_;        // eta_{k,t}
  std::vector<double> prev_rates_;   // eta_{k,t-1}
  std::vector<double> initial_rates_;
  std::vector<double> cumulative_sq_;
  std::vector<double> weighted_sq_;
  double ratio_cost_ = 0.0;
  RegretLedger ledger_;
};

}  // namespace exagg
