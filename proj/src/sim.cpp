#include "exagg/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exagg/rng.hpp"

namespace exagg {
namespace sim {

namespace {

// Stream ids keep the loss and confidence draws independent.
constexpr std::uint64_t kLossStream = 0;
constexpr std::uint64_t kConfidenceStream = 1;

}  // namespace

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  if (name == "iid_gap") return GeneratorKind::iid_gap;
  if (name == "adversarial_random") return GeneratorKind::adversarial_random;
  if (name == "small_loss") return GeneratorKind::small_loss;
  if (name == "gain_framed") return GeneratorKind::gain_framed;
  if (name == "identical") return GeneratorKind::identical;
  if (name == "confidence_bernoulli") return GeneratorKind::confidence_bernoulli;
  if (name == "confidence_scaled") return GeneratorKind::confidence_scaled;
  if (name == "alternating") return GeneratorKind::alternating;
  return std::nullopt;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::iid_gap: return "iid_gap";
    case GeneratorKind::adversarial_random: return "adversarial_random";
    case GeneratorKind::small_loss: return "small_loss";
    case GeneratorKind::gain_framed: return "gain_framed";
    case GeneratorKind::identical: return "identical";
    case GeneratorKind::confidence_bernoulli: return "confidence_bernoulli";
    case GeneratorKind::confidence_scaled: return "confidence_scaled";
    case GeneratorKind::alternating: return "alternating";
  }
  return "?";
}

bool emits_confidences(GeneratorKind kind) {
  return kind == GeneratorKind::confidence_bernoulli ||
         kind == GeneratorKind::confidence_scaled;
}

void GeneratorSpec::validate() const {
  if (experts == 0) throw InvalidSpec("generator needs at least one expert");
  if (rounds == 0) throw InvalidSpec("generator needs at least one round");
  switch (kind) {
    case GeneratorKind::iid_gap: {
      if (means.size() != experts) {
        throw InvalidSpec("iid_gap needs one Bernoulli mean per expert");
      }
      if (!(alpha > 0.0) || alpha > 1.0) {
        throw InvalidSpec("iid_gap needs a gap alpha in (0, 1]");
      }
      for (double m : means) {
        if (m < 0.0 || m > 1.0) {
          throw InvalidSpec("Bernoulli means must lie in [0, 1]");
        }
      }
      const std::size_t best = static_cast<std::size_t>(
          std::min_element(means.begin(), means.end()) - means.begin());
      for (std::size_t k = 0; k < means.size(); ++k) {
        if (k != best && means[k] - means[best] < alpha) {
          throw InvalidSpec("declared gap alpha exceeds the actual mean gap");
        }
      }
      return;
    }
    case GeneratorKind::small_loss:
      if (!(loss_scale > 0.0) || loss_scale > 1.0) {
        throw InvalidSpec("small_loss scale must lie in (0, 1]");
      }
      return;
    case GeneratorKind::confidence_bernoulli:
      if (!(activity > 0.0) || activity > 1.0) {
        throw InvalidSpec("activity must lie in (0, 1]");
      }
      return;
    case GeneratorKind::confidence_scaled: {
      if (lambda.size() != experts) {
        throw InvalidSpec("confidence_scaled needs one lambda per expert");
      }
      double max_lambda = 0.0;
      for (double l : lambda) {
        if (l < 0.0 || l > 1.0) {
          throw InvalidSpec("lambda scales must lie in [0, 1]");
        }
        max_lambda = std::max(max_lambda, l);
      }
      if (!(max_lambda > 0.0)) {
        throw InvalidSpec("at least one lambda must be positive");
      }
      return;
    }
    case GeneratorKind::alternating:
      if (experts != 2) {
        throw InvalidSpec("the alternating instance is defined for K = 2");
      }
      return;
    case GeneratorKind::adversarial_random:
    case GeneratorKind::gain_framed:
    case GeneratorKind::identical:
      return;
  }
  throw InvalidSpec("unknown generator kind");
}

Generator::Generator(GeneratorSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
}

Round Generator::round(std::size_t t) const {
  if (t >= spec_.rounds) throw InvalidSpec("round index beyond the horizon");
  const std::size_t K = spec_.experts;
  std::vector<double> losses(K);
  std::optional<ConfidenceVector> confidences;

  switch (spec_.kind) {
    case GeneratorKind::iid_gap:
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] =
            rng::uniform01(spec_.seed, t, k, kLossStream) < spec_.means[k]
                ? 1.0
                : 0.0;
      }
      break;
    case GeneratorKind::adversarial_random:
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] = rng::uniform01(spec_.seed, t, k, kLossStream);
      }
      break;
    case GeneratorKind::small_loss:
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] =
            spec_.loss_scale * rng::uniform01(spec_.seed, t, k, kLossStream);
      }
      break;
    case GeneratorKind::gain_framed: {
      // Same stream as adversarial_random, shifted into [-1, 0]; the
      // canonical rescale undoes the shift, which is what the paired
      // translation-invariance checks rely on.
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] = rng::uniform01(spec_.seed, t, k, kLossStream) - 1.0;
      }
      return Round{LossVector(std::move(losses), -1.0, 0.0), std::nullopt};
    }
    case GeneratorKind::identical: {
      const double shared = rng::uniform01(spec_.seed, t, 0, kLossStream);
      losses.assign(K, shared);
      break;
    }
    case GeneratorKind::confidence_bernoulli: {
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] = rng::uniform01(spec_.seed, t, k, kLossStream);
      }
      std::vector<double> conf(K);
      bool any = false;
      for (std::size_t k = 0; k < K; ++k) {
        conf[k] = rng::uniform01(spec_.seed, t, k, kConfidenceStream) <
                          spec_.activity
                      ? 1.0
                      : 0.0;
        any = any || conf[k] > 0.0;
      }
      if (!any) conf[t % K] = 1.0;  // keep the active set nonempty
      confidences = ConfidenceVector(std::move(conf));
      break;
    }
    case GeneratorKind::confidence_scaled: {
      for (std::size_t k = 0; k < K; ++k) {
        losses[k] = rng::uniform01(spec_.seed, t, k, kLossStream);
      }
      std::vector<double> conf(K);
      for (std::size_t k = 0; k < K; ++k) {
        conf[k] = spec_.lambda[k] *
                  rng::uniform01_open(spec_.seed, t, k, kConfidenceStream);
      }
      confidences = ConfidenceVector(std::move(conf));
      break;
    }
    case GeneratorKind::alternating:
      losses[0] = t % 2 == 0 ? 0.0 : 1.0;
      losses[1] = 1.0 - losses[0];
      break;
  }

  return Round{LossVector(std::move(losses)), std::move(confidences)};
}

}  // namespace sim
}  // namespace exagg
