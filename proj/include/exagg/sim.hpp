#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exagg/types.hpp"

namespace exagg {
namespace sim {

enum class GeneratorKind {
  iid_gap,              // independent Bernoulli losses with a mean gap
  adversarial_random,   // i.i.d. uniform noise (worst-case stand-in)
  small_loss,           // uniform on [0, loss_scale]
  gain_framed,          // raw losses in [-1, 0], rescaled at ingestion
  identical,            // all experts share each round's loss
  confidence_bernoulli, // uniform losses, {0,1} confidences
  confidence_scaled,    // uniform losses, confidences lambda_k * U(0,1]
  alternating           // the classic two-expert hard instance (0,1),(1,0),...
};

std::optional<GeneratorKind> parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);
bool emits_confidences(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::adversarial_random;
  std::size_t experts = 0;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;

  // iid_gap: per-expert Bernoulli means; alpha is the declared minimal gap
  // between the best mean and every other.
  std::vector<double> means;
  double alpha = 0.0;

  double loss_scale = 0.1;   // small_loss
  double activity = 0.5;     // confidence_bernoulli: P(I = 1)
  std::vector<double> lambda;  // confidence_scaled per-expert scales

  void validate() const;  // throws InvalidSpec
};

struct Round {
  LossVector losses;
  std::optional<ConfidenceVector> confidences;
};

// Deterministic stream: round(t) is a pure function of (spec, t), so runs
// reproduce bitwise for the same spec and rounds may be generated in any
// order or concurrently.
class Generator {
 public:
  explicit Generator(GeneratorSpec spec);

  const GeneratorSpec& spec() const { return spec_; }
  std::size_t rounds() const { return spec_.rounds; }
  Round round(std::size_t t) const;  // t in [0, rounds)

 private:
  GeneratorSpec spec_;
};

}  // namespace sim
}  // namespace exagg
