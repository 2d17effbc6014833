#include "exagg/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace exagg {

namespace {

// Slack for values that should sit in [0,1] but may carry float round-off.
constexpr double kRangeEps = 1e-12;
constexpr double kSimplexEps = 1e-12;

}  // namespace

LossVector::LossVector(std::vector<double> values)
    : values_(std::move(values)), lo_(0.0), hi_(1.0) {
  validate_and_clamp();
}

LossVector::LossVector(std::vector<double> raw_values, double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("loss range must satisfy lo < hi");
  }
  lo_ = lo;
  hi_ = hi;
  values_ = std::move(raw_values);
  const double width = hi - lo;
  for (double& v : values_) v = (v - lo) / width;
  validate_and_clamp();
}

LossVector LossVector::from_rescaled(std::vector<double> values, double lo,
                                     double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("loss range must satisfy lo < hi");
  }
  LossVector out;
  out.values_ = std::move(values);
  out.lo_ = lo;
  out.hi_ = hi;
  out.validate_and_clamp();
  return out;
}

void LossVector::validate_and_clamp() {
  if (values_.empty()) throw LossOutOfRange("loss vector must not be empty");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < -kRangeEps || v > 1.0 + kRangeEps) {
      throw LossOutOfRange("loss for expert " + std::to_string(k + 1) +
                           " is outside [0,1] after rescaling: " +
                           std::to_string(v));
    }
    // Clamp round-off overshoot so downstream arithmetic sees exact [0,1].
    values_[k] = std::clamp(v, 0.0, 1.0);
  }
}

ConfidenceVector::ConfidenceVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw EmptyActiveSet("confidence vector must not be empty");
  bool any_active = false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw DomainError("confidence for expert " + std::to_string(k + 1) +
                        " is outside [0,1]: " + std::to_string(v));
    }
    any_active = any_active || v > 0.0;
  }
  if (!any_active) throw EmptyActiveSet("all confidences are zero");
}

ConfidenceVector ConfidenceVector::all_ones(std::size_t experts) {
  return ConfidenceVector(std::vector<double>(experts, 1.0));
}

MixtureVector::MixtureVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("mixture must not be empty");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError("mixture weights must be nonnegative");
    }
    sum += w;
  }
  // 1e-12 plus headroom for the summation round-off of very wide vectors.
  const double tolerance =
      kSimplexEps + static_cast<double>(weights_.size()) * 2.3e-16;
  if (std::abs(sum - 1.0) > tolerance) {
    throw DomainError("mixture weights must sum to one, got " +
                      std::to_string(sum));
  }
}

MixtureVector MixtureVector::uniform(std::size_t experts) {
  return MixtureVector(
      std::vector<double>(experts, 1.0 / static_cast<double>(experts)));
}

MixtureVector MixtureVector::point_mass(std::size_t experts, std::size_t k) {
  std::vector<double> w(experts, 0.0);
  w.at(k) = 1.0;
  MixtureVector out;
  out.weights_ = std::move(w);
  return out;
}

MixtureVector MixtureVector::normalized(std::vector<double> raw) {
  double sum = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError("mixture weights must be nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("cannot normalize a zero mass vector");
  for (double& w : raw) w /= sum;
  MixtureVector out;
  out.weights_ = std::move(raw);
  return out;
}

RoundOutcome make_outcome(MixtureVector mixture, const LossVector& losses) {
  if (mixture.size() != losses.size()) {
    throw ConfigMismatch("mixture and loss vector sizes differ");
  }
  double aggregate = 0.0;
  for (std::size_t k = 0; k < mixture.size(); ++k) {
    aggregate += mixture[k] * losses[k];
  }
  std::vector<double> regrets(mixture.size());
  for (std::size_t k = 0; k < mixture.size(); ++k) {
    regrets[k] = aggregate - losses[k];
  }
  return RoundOutcome{std::move(mixture), aggregate, std::move(regrets)};
}

RegretLedger::RegretLedger(std::size_t experts)
    : cumulative_regret_(experts, 0.0),
      squared_excess_(experts, 0.0),
      positive_part_(experts, 0.0),
      negative_part_(experts, 0.0),
      confidence_regret_(experts, 0.0),
      cumulative_regret_original_(experts, 0.0) {
  if (experts == 0) throw ConfigMismatch("ledger needs at least one expert");
}

void RegretLedger::record(const RoundOutcome& outcome, double scale) {
  record(outcome, ConfidenceVector::all_ones(expert_count()), scale);
}

void RegretLedger::record(const RoundOutcome& outcome,
                          const ConfidenceVector& confidences, double scale) {
  if (outcome.instantaneous_regrets.size() != expert_count() ||
      confidences.size() != expert_count()) {
    throw ConfigMismatch("round outcome does not match ledger expert count");
  }
  for (std::size_t k = 0; k < expert_count(); ++k) {
    const double r = outcome.instantaneous_regrets[k];
    cumulative_regret_[k] += r;
    squared_excess_[k] += r * r;
    if (r >= 0.0) {
      positive_part_[k] += r;
    } else {
      negative_part_[k] += -r;
    }
    confidence_regret_[k] += confidences[k] * r;
    cumulative_regret_original_[k] += r * scale;
  }
  ++round_count_;
}

std::vector<double> LearnerConfig::resolved_weights() const {
  if (expert_count == 0) {
    throw ConfigMismatch("expert_count must be at least 1");
  }
  if (initial_weights.empty()) {
    return std::vector<double>(expert_count,
                               1.0 / static_cast<double>(expert_count));
  }
  if (initial_weights.size() != expert_count) {
    throw ConfigMismatch("initial_weights size does not match expert_count");
  }
  double sum = 0.0;
  for (double w : initial_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ConfigMismatch("initial weights must be strictly positive");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12 * static_cast<double>(expert_count)) {
    throw ConfigMismatch("initial weights must sum to one");
  }
  return initial_weights;
}

std::vector<double> LearnerConfig::resolved_rates(double max_rate) const {
  if (!fixed_rates.has_value()) {
    return std::vector<double>(expert_count, max_rate);
  }
  if (fixed_rates->size() != expert_count) {
    throw ConfigMismatch("fixed_rates size does not match expert_count");
  }
  for (double eta : *fixed_rates) {
    if (!(eta > 0.0) || eta > max_rate || !std::isfinite(eta)) {
      throw RateOutOfRange("learning rate " + std::to_string(eta) +
                           " outside (0, " + std::to_string(max_rate) + "]");
    }
  }
  return *fixed_rates;
}

}  // namespace exagg
