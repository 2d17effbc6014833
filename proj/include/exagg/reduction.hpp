#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// Generic reduction from the confidence setting to the standard setting.
//
// The wrapped standard learner runs on modified losses
//   lt_k = I_k * l_k + (1 - I_k) * agg,
// while the played mixture is its prediction renormalized over the active
// set, p_k = I_k * pt_k / sum_j I_j * pt_j. Round by round the confidence
// regret on the original losses equals the inner learner's standard regret
// on the modified losses:
//   I_k (agg - l_k) = pt . lt - lt_k.
//
// The inner mixture is captured at predict time and consumed by the next
// update; a second predict before an update throws StaleRound. An update
// without a prior predict primes itself.
class ConfidenceReduction final : public ConfidenceLearner {
 public:
  explicit ConfidenceReduction(std::unique_ptr<Learner> inner);

  std::size_t expert_count() const override;
  MixtureVector predict(const ConfidenceVector& confidences) override;
  RoundOutcome update(const LossVector& losses,
                      const ConfidenceVector& confidences) override;

  // Confidence regret on the original losses lives here.
  const RegretLedger& ledger() const override { return ledger_; }
  // Standard regret on the modified losses lives in the inner ledger.
  const Learner& inner() const { return *inner_; }

  // Inspection hooks for the per-round identity (valid after an update).
  const MixtureVector& last_inner_mixture() const;
  const MixtureVector& last_outer_mixture() const;
  const std::vector<double>& last_modified_losses() const;

 private:
  static MixtureVector redistribute(const MixtureVector& inner,
                                    const ConfidenceVector& confidences);

  std::unique_ptr<Learner> inner_;
  std::optional<MixtureVector> pending_;
  std::optional<MixtureVector> last_inner_;
  std::optional<MixtureVector> last_outer_;
  std::vector<double> last_modified_;
  RegretLedger ledger_;
};

}  // namespace exagg
