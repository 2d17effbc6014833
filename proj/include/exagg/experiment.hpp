#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "exagg/bounds.hpp"
#include "exagg/sim.hpp"
#include "exagg/types.hpp"

namespace exagg {
namespace experiment {

enum class LearnerKind { ml_prod, adapt_ml_prod, ml_poly, mlc_hedge };

std::optional<LearnerKind> parse_learner_kind(const std::string& name);
std::string to_string(LearnerKind kind);

std::optional<bounds::TheoremId> parse_theorem_id(const std::string& name);

// Reports that carry a worst-case guarantee for the learner that produced
// the run; only these gate the exit status.
bool is_proved_bound(bounds::TheoremId id);

struct ExperimentConfig {
  LearnerKind learner = LearnerKind::adapt_ml_prod;
  bool reduction = false;

  // Input: either a generator spec or CSV files.
  std::optional<sim::GeneratorSpec> generator;
  std::optional<std::filesystem::path> losses_path;
  std::optional<std::filesystem::path> confidences_path;

  // Pre-rescale range for CSV losses.
  double range_lo = 0.0;
  double range_hi = 1.0;

  // Empty means the learner's default proved set.
  std::vector<bounds::TheoremId> checks;

  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> rates;  // ml_prod / mlc_hedge
};

struct ExperimentResult {
  std::size_t experts = 0;
  std::size_t rounds = 0;
  std::vector<bounds::BoundReport> reports;
  std::vector<double> final_regret;
  std::vector<double> final_confidence_regret;
  std::vector<double> final_regret_original;
  std::size_t best_expert = 0;  // 0-based argmin of cumulative loss
  bool all_proved_satisfied = true;
};

// Runs one experiment and writes trajectory.csv, bounds.json and
// summary.json into config.output_dir. Throws (Error subclasses) on input
// problems; bound violations are reported via all_proved_satisfied.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class SuiteScale { small, medium };

struct SuiteConfig {
  std::size_t seeds = 100;
  SuiteScale scale = SuiteScale::small;
  std::uint64_t base_seed = 0;
  // Mis-sets ML-Prod's rate to 0.9 (construction bypass) and drives it with
  // sequences that break the Theorem-1 formula: a negative control showing
  // the checker flags real violations.
  bool inject_bug = false;
};

struct SuiteReport {
  std::size_t runs = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // one line per violated check
  // Set in inject_bug mode: whether the checker flagged the mis-tuned run.
  std::optional<bool> negative_control_caught;
};

// The randomized bound-satisfaction matrix: learners x generators x
// theorems, plus the per-round structural invariants from the proofs
// (weight conservation, adaptive-weight potential, squared-norm increments,
// reduction identity). Deterministic for a given seed range.
SuiteReport check_bounds_suite(const SuiteConfig& config);

}  // namespace experiment
}  // namespace exagg
