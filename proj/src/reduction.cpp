#include "exagg/reduction.hpp"

#include <utility>

namespace exagg {

ConfidenceReduction::ConfidenceReduction(std::unique_ptr<Learner> inner)
    : inner_(std::move(inner)), ledger_(inner_->expert_count()) {}

std::size_t ConfidenceReduction::expert_count() const {
  return inner_->expert_count();
}

MixtureVector ConfidenceReduction::redistribute(
    const MixtureVector& inner, const ConfidenceVector& confidences) {
  std::vector<double> scores(inner.size());
  double total = 0.0;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    scores[k] = confidences[k] * inner[k];
    total += scores[k];
  }
  if (total > 0.0) return MixtureVector::normalized(std::move(scores));
  // The inner learner can put all its mass on sleeping experts (ML-Poly
  // emits exact zeros). Fall back to confidence-proportional mass; the
  // reduction identity holds for any mixture supported on the active set.
  return MixtureVector::normalized(confidences.values());
}

MixtureVector ConfidenceReduction::predict(
    const ConfidenceVector& confidences) {
  if (confidences.size() != expert_count()) {
    throw ConfigMismatch("confidence vector size does not match expert count");
  }
  if (pending_.has_value()) {
    throw StaleRound("predict called twice without an update");
  }
  pending_ = inner_->predict();
  return redistribute(*pending_, confidences);
}

RoundOutcome ConfidenceReduction::update(const LossVector& losses,
                                         const ConfidenceVector& confidences) {
  if (losses.size() != expert_count() ||
      confidences.size() != expert_count()) {
    throw ConfigMismatch("round inputs do not match expert count");
  }
  if (!pending_.has_value()) pending_ = inner_->predict();
  MixtureVector inner_mixture = std::move(*pending_);
  pending_.reset();

  MixtureVector outer = redistribute(inner_mixture, confidences);
  double aggregate = 0.0;
  for (std::size_t k = 0; k < expert_count(); ++k) {
    aggregate += outer[k] * losses[k];
  }

  // Modified losses stay in [0,1]: convex combination of l_k and agg.
  std::vector<double> modified(expert_count());
  for (std::size_t k = 0; k < expert_count(); ++k) {
    modified[k] = confidences[k] * losses[k] +
                  (1.0 - confidences[k]) * aggregate;
  }
  last_modified_ = modified;
  inner_->update(LossVector::from_rescaled(std::move(modified),
                                           losses.range_lo(),
                                           losses.range_hi()));

  std::vector<double> regrets(expert_count());
  for (std::size_t k = 0; k < expert_count(); ++k) {
    regrets[k] = aggregate - losses[k];
  }
  RoundOutcome outcome{outer, aggregate, std::move(regrets)};
  ledger_.record(outcome, confidences, losses.scale());

  last_inner_ = std::move(inner_mixture);
  last_outer_ = std::move(outer);
  return outcome;
}

const MixtureVector& ConfidenceReduction::last_inner_mixture() const {
  if (!last_inner_.has_value()) throw StaleRound("no round played yet");
  return *last_inner_;
}

const MixtureVector& ConfidenceReduction::last_outer_mixture() const {
  if (!last_outer_.has_value()) throw StaleRound("no round played yet");
  return *last_outer_;
}

const std::vector<double>& ConfidenceReduction::last_modified_losses() const {
  if (last_modified_.empty()) throw StaleRound("no round played yet");
  return last_modified_;
}

}  // namespace exagg
