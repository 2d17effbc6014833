#include "exagg/gradient_trick.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "exagg/rng.hpp"

namespace exagg {

void ConvexLossOracle::validate() const {
  if (dimension == 0 || !evaluate || !gradient) {
    throw DomainError("convex loss oracle is incomplete");
  }
  if (lower.size() != dimension || upper.size() != dimension) {
    throw DomainError("oracle box does not match the declared dimension");
  }
  for (std::size_t i = 0; i < dimension; ++i) {
    if (!(lower[i] < upper[i])) {
      throw DomainError("oracle box must have lower < upper per coordinate");
    }
  }
  if (!(gradient_bound > 0.0)) {
    throw DomainError("gradient bound must be positive");
  }
}

double ConvexLossOracle::pseudo_loss_magnitude() const {
  double reach = 0.0;
  for (std::size_t i = 0; i < dimension; ++i) {
    reach += std::max(std::abs(lower[i]), std::abs(upper[i]));
  }
  return gradient_bound * reach;
}

bool ConvexLossOracle::check_gradient(std::size_t points,
                                      std::uint64_t seed) const {
  validate();
  for (std::size_t p = 0; p < points; ++p) {
    std::vector<double> x(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      // Interior points, 10% away from the box faces.
      const double u = 0.1 + 0.8 * rng::uniform01(seed, p, i);
      x[i] = lower[i] + u * (upper[i] - lower[i]);
    }
    const std::vector<double> g = gradient(x);
    for (std::size_t i = 0; i < dimension; ++i) {
      const double h = 1e-6 * (upper[i] - lower[i]);
      std::vector<double> hi = x, lo = x;
      hi[i] += h;
      lo[i] -= h;
      const double fd = (evaluate(hi) - evaluate(lo)) / (2.0 * h);
      if (std::abs(fd - g[i]) > 1e-5 * std::max(1.0, std::abs(g[i]))) {
        return false;
      }
    }
  }
  return true;
}

LossVector linearize(const ConvexLossOracle& oracle,
                     const std::vector<std::vector<double>>& expert_points,
                     std::span<const double> aggregate_point) {
  oracle.validate();
  if (aggregate_point.size() != oracle.dimension) {
    throw DomainError("aggregate point does not match oracle dimension");
  }
  const std::vector<double> grad = oracle.gradient(aggregate_point);
  if (grad.size() != oracle.dimension) {
    throw DomainError("gradient output does not match oracle dimension");
  }
  const double magnitude = oracle.pseudo_loss_magnitude();
  std::vector<double> raw(expert_points.size());
  for (std::size_t k = 0; k < expert_points.size(); ++k) {
    if (expert_points[k].size() != oracle.dimension) {
      throw DomainError("expert point does not match oracle dimension");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < oracle.dimension; ++i) {
      dot += grad[i] * expert_points[k][i];
    }
    if (std::abs(dot) > magnitude * (1.0 + 1e-12)) {
      throw GradientBoundViolated(
          "pseudo-loss " + std::to_string(dot) + " for expert " +
          std::to_string(k + 1) + " exceeds the declared magnitude " +
          std::to_string(magnitude) + "; the gradient bound is wrong");
    }
    raw[k] = dot;
  }
  return LossVector(std::move(raw), -magnitude, magnitude);
}

GradientTrickSession::GradientTrickSession(
    std::size_t dimension, std::unique_ptr<ConfidenceLearner> learner)
    : dimension_(dimension), learner_(std::move(learner)) {}

GradientTrickSession::ConvexRound GradientTrickSession::step(
    const ConvexLossOracle& oracle,
    const std::vector<std::vector<double>>& expert_points,
    const ConfidenceVector& confidences) {
  if (oracle.dimension != dimension_) {
    throw DomainError("oracle dimension changed mid-session");
  }
  if (expert_points.size() != learner_->expert_count()) {
    throw ConfigMismatch("expert point count does not match learner");
  }
  MixtureVector mixture = learner_->predict(confidences);
  std::vector<double> aggregate(dimension_, 0.0);
  for (std::size_t k = 0; k < expert_points.size(); ++k) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      aggregate[i] += mixture[k] * expert_points[k][i];
    }
  }
  LossVector pseudo = linearize(oracle, expert_points, aggregate);
  RoundOutcome outcome = learner_->update(pseudo, confidences);
  const double convex_loss = oracle.evaluate(aggregate);
  return ConvexRound{std::move(mixture), std::move(aggregate), convex_loss,
                     std::move(outcome)};
}

}  // namespace exagg
