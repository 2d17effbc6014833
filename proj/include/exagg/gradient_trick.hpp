#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "exagg/learner.hpp"

namespace exagg {

// A differentiable convex loss f over a box domain X in R^d, together with
// the declared bound G on every partial derivative over X. The bound and
// the box determine the interval every linearized pseudo-loss
// grad f(xhat) . x_k falls into, which is what makes the affine rescale
// into [0,1] auditable.
struct ConvexLossOracle {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> evaluate;
  std::function<std::vector<double>(std::span<const double>)> gradient;
  double gradient_bound = 0.0;  // max_i sup_X |df/dx_i|
  std::vector<double> lower;    // box lower corner
  std::vector<double> upper;    // box upper corner

  // Half-width of the interval containing every raw pseudo-loss:
  // |grad . x| <= G * sum_i max(|lower_i|, |upper_i|).
  double pseudo_loss_magnitude() const;

  // Central-difference check of the gradient on random interior points at
  // relative tolerance 1e-5.
  bool check_gradient(std::size_t points, std::uint64_t seed) const;

  void validate() const;
};

// The gradient trick: linearize f at the aggregate prediction and hand the
// per-expert pseudo-losses grad f(xhat) . x_k to a linear-loss learner,
// rescaled into [0,1] with the oracle's declared range. Throws
// GradientBoundViolated when a raw pseudo-loss escapes that range.
LossVector linearize(const ConvexLossOracle& oracle,
                     const std::vector<std::vector<double>>& expert_points,
                     std::span<const double> aggregate_point);

// Runs confidence-aware convex aggregation on top of any confidence
// learner via the gradient trick.
class GradientTrickSession {
 public:
  GradientTrickSession(std::size_t dimension,
                       std::unique_ptr<ConfidenceLearner> learner);

  struct ConvexRound {
    MixtureVector mixture;
    std::vector<double> aggregate_point;
    double convex_loss = 0.0;      // f(xhat)
    RoundOutcome linear_outcome;   // on the rescaled pseudo-losses
  };

  // One round: mix the expert points, evaluate f at the mixture, feed the
  // linearized losses to the wrapped learner.
  ConvexRound step(const ConvexLossOracle& oracle,
                   const std::vector<std::vector<double>>& expert_points,
                   const ConfidenceVector& confidences);

  const ConfidenceLearner& learner() const { return *learner_; }

 private:
  std::size_t dimension_;
  std::unique_ptr<ConfidenceLearner> learner_;
};

}  // namespace exagg
