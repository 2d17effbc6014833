#pragma once

#include "exagg/types.hpp"

namespace exagg {

// Standard-setting learner: sees the full loss vector every round.
// Instances are single-threaded state machines; predict/update must be
// serialized per instance. Distinct instances may run concurrently.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::size_t expert_count() const = 0;

  // The mixture to play this round. Does not mutate state.
  virtual MixtureVector predict() const = 0;

  // Advances one round: plays predict()'s mixture against the losses,
  // updates internal weights/rates and the ledger.
  virtual RoundOutcome update(const LossVector& losses) = 0;

  virtual const RegretLedger& ledger() const = 0;
};

// Learner that consumes per-round confidences. Sleeping experts are the
// {0,1}-valued restriction of the same interface.
class ConfidenceLearner {
 public:
  virtual ~ConfidenceLearner() = default;

  virtual std::size_t expert_count() const = 0;
  virtual MixtureVector predict(const ConfidenceVector& confidences) = 0;
  virtual RoundOutcome update(const LossVector& losses,
                              const ConfidenceVector& confidences) = 0;
  virtual const RegretLedger& ledger() const = 0;
};

}  // namespace exagg
