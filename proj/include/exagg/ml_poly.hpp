#pragma once

#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// Polynomially weighted averages (order-2 potential) with per-expert rates
//
//   eta_{k,t} = 1 / (1 + sum_{s<=t} r_{k,s}^2),
//   p_{k,t} ~ eta_{k,t-1} * max(R_{k,t-1}, 0).
//
// When every cumulative regret is nonpositive (including the first round)
// the mixture is undefined by the weighting rule; we emit the uniform
// mixture, which preserves permutation symmetry.
class MlPoly final : public Learner {
 public:
  explicit MlPoly(const LearnerConfig& config);

  std::size_t expert_count() const override { return regrets_.size(); }
  MixtureVector predict() const override;
  RoundOutcome update(const LossVector& losses) override;
  const RegretLedger& ledger() const override { return ledger_; }

  const std::vector<double>& regrets() const { return regrets_; }
  const std::vector<double>& rates() const { return rates_; }
  const std::vector<double>& cumulative_sq() const { return cumulative_sq_; }

 private:
  std::vector<double> regrets_;
  std::vector<double> rates_;
  std::vector<double> cumulative_sq_;
  RegretLedger ledger_;
};

}  // namespace exagg
