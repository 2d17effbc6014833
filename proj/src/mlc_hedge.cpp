#include "exagg/mlc_hedge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace exagg {

MlcHedge::MlcHedge(const LearnerConfig& config)
    : rates_(config.resolved_rates(kMaxRate)),
      weighted_loss_(config.expert_count, 0.0),
      ledger_(config.expert_count) {
  const std::vector<double> w0 = config.resolved_weights();
  log_weights_.resize(w0.size());
  for (std::size_t k = 0; k < w0.size(); ++k) {
    log_weights_[k] = std::log(w0[k]);
  }
}

MixtureVector MlcHedge::mixture_for(const ConfidenceVector& confidences) const {
  if (confidences.size() != expert_count()) {
    throw ConfigMismatch("confidence vector size does not match expert count");
  }
  // Scores in the log domain; -expm1(-eta) = 1 - e^{-eta} > 0 for eta > 0.
  std::vector<double> log_scores(expert_count(),
                                 -std::numeric_limits<double>::infinity());
  double max_score = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < expert_count(); ++k) {
    if (!confidences.active(k)) continue;
    log_scores[k] = log_weights_[k] +
                    std::log(confidences[k] * -std::expm1(-rates_[k]));
    max_score = std::max(max_score, log_scores[k]);
  }
  std::vector<double> scores(expert_count(), 0.0);
  for (std::size_t k = 0; k < expert_count(); ++k) {
    if (confidences.active(k)) scores[k] = std::exp(log_scores[k] - max_score);
  }
  return MixtureVector::normalized(std::move(scores));
}

MixtureVector MlcHedge::predict(const ConfidenceVector& confidences) {
  return mixture_for(confidences);
}

RoundOutcome MlcHedge::update(const LossVector& losses,
                              const ConfidenceVector& confidences) {
  if (losses.size() != expert_count()) {
    throw ConfigMismatch("loss vector size does not match expert count");
  }
  RoundOutcome outcome = make_outcome(mixture_for(confidences), losses);
  for (std::size_t k = 0; k < expert_count(); ++k) {
    log_weights_[k] += rates_[k] * confidences[k] *
                       (std::exp(-rates_[k]) * outcome.aggregate_loss -
                        losses[k]);
    weighted_loss_[k] += confidences[k] * losses[k];
  }
  ledger_.record(outcome, confidences, losses.scale());
  return outcome;
}

}  // namespace exagg
