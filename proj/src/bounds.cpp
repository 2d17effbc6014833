#include "exagg/bounds.hpp"

#include <cmath>

namespace exagg {
namespace bounds {

namespace {

const double kE = std::exp(1.0);

std::vector<double> log_inverse(const std::vector<double>& weights) {
  std::vector<double> out(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    out[k] = std::log(1.0 / weights[k]);
  }
  return out;
}

void require_rounds(const RegretLedger& ledger, std::size_t rounds) {
  if (ledger.round_count() != rounds) {
    throw ConfigMismatch("stated round count does not match the ledger");
  }
}

void require_experts(const RegretLedger& ledger, std::size_t experts) {
  if (ledger.expert_count() != experts) {
    throw ConfigMismatch("stated expert count does not match the ledger");
  }
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::Eq5: return "Eq5";
    case TheoremId::Eq6: return "Eq6";
    case TheoremId::T2: return "T2";
    case TheoremId::C3: return "C3";
    case TheoremId::T4: return "T4";
    case TheoremId::C5: return "C5";
    case TheoremId::ISEL: return "ISEL";
    case TheoremId::IID: return "IID";
    case TheoremId::T7: return "T7";
  }
  return "?";
}

bool BoundReport::all_satisfied() const {
  for (bool ok : satisfied) {
    if (!ok) return false;
  }
  return true;
}

BoundReport finalize_report(TheoremId id, std::vector<double> per_expert_bound,
                            std::vector<double> realized, bool informational) {
  BoundReport report;
  report.theorem_id = id;
  report.per_expert_bound = std::move(per_expert_bound);
  report.realized = std::move(realized);
  report.informational = informational;
  report.slack.resize(report.per_expert_bound.size());
  report.satisfied.resize(report.per_expert_bound.size());
  for (std::size_t k = 0; k < report.per_expert_bound.size(); ++k) {
    report.slack[k] = report.per_expert_bound[k] - report.realized[k];
    report.satisfied[k] = report.slack[k] >= -kSatisfactionTolerance;
  }
  return report;
}

double corollary3_constant(std::size_t experts, std::size_t rounds) {
  if (experts < 2) throw DegenerateK("Corollary 3 needs at least two experts");
  const double K = static_cast<double>(experts);
  const double T = static_cast<double>(rounds);
  return 3.0 * std::log(K) +
         std::log(1.0 + K / (2.0 * kE) * (1.0 + std::log(T + 1.0)));
}

XiPair xi_adapt_ml_prod(std::size_t experts, std::size_t rounds) {
  const double c = corollary3_constant(experts, rounds);
  const double log_k = std::log(static_cast<double>(experts));
  return XiPair{c / std::sqrt(log_k), 2.0 * c};
}

XiPair xi_ml_poly(std::size_t experts, std::size_t rounds) {
  if (experts < 2) throw DegenerateK("xi extraction needs at least two experts");
  const double K = static_cast<double>(experts);
  const double T = static_cast<double>(rounds);
  const double log_k = std::log(K);
  const double xi1 = std::sqrt(K * (1.0 + std::log(1.0 + T)) / log_k);
  return XiPair{xi1, xi1 * std::sqrt(log_k)};
}

BoundReport bound_theorem1(const RegretLedger& ledger,
                           const LearnerConfig& config) {
  require_experts(ledger, config.expert_count);
  if (!config.fixed_rates.has_value()) {
    throw ConfigMismatch("Theorem 1 needs the fixed rates the run used");
  }
  const std::vector<double> gamma = log_inverse(config.resolved_weights());
  const std::vector<double>& rates = *config.fixed_rates;
  std::vector<double> bound(ledger.expert_count());
  for (std::size_t k = 0; k < bound.size(); ++k) {
    bound[k] = gamma[k] / rates[k] + rates[k] * ledger.squared_excess()[k];
  }
  return finalize_report(TheoremId::T1, std::move(bound),
                         ledger.cumulative_regret(), false);
}

BoundReport bound_optimized(const RegretLedger& ledger,
                            const LearnerConfig& config) {
  require_experts(ledger, config.expert_count);
  const std::vector<double> gamma = log_inverse(config.resolved_weights());
  std::vector<double> bound(ledger.expert_count());
  for (std::size_t k = 0; k < bound.size(); ++k) {
    bound[k] = 2.0 * std::sqrt(ledger.squared_excess()[k] * gamma[k]);
  }
  return finalize_report(TheoremId::Eq5, std::move(bound),
                         ledger.cumulative_regret(), true);
}

BoundReport bound_theorem2(const RegretLedger& ledger,
                           const AdaptRateStats& stats,
                           const std::vector<double>& initial_weights) {
  require_experts(ledger, initial_weights.size());
  require_experts(ledger, stats.current_rates.size());
  const std::vector<double> gamma = log_inverse(initial_weights);
  const double ratio_term = std::log(1.0 + stats.rate_ratio_cost / kE);
  std::vector<double> bound(ledger.expert_count());
  for (std::size_t k = 0; k < bound.size(); ++k) {
    bound[k] = gamma[k] / stats.initial_rates[k] +
               stats.weighted_squared_excess[k] +
               ratio_term / stats.current_rates[k];
  }
  return finalize_report(TheoremId::T2, std::move(bound),
                         ledger.cumulative_regret(), false);
}

BoundReport bound_corollary3(const RegretLedger& ledger, std::size_t experts,
                             std::size_t rounds,
                             const std::vector<double>& initial_weights) {
  if (experts < 2) throw DegenerateK("Corollary 3 needs at least two experts");
  require_experts(ledger, experts);
  require_experts(ledger, initial_weights.size());
  require_rounds(ledger, rounds);
  const double K = static_cast<double>(experts);
  const double T = static_cast<double>(rounds);
  const double b_term =
      std::log(1.0 + K / (2.0 * kE) * (1.0 + std::log(T + 1.0)));
  const std::vector<double> gamma = log_inverse(initial_weights);
  std::vector<double> bound(experts);
  for (std::size_t k = 0; k < experts; ++k) {
    const double c_k = 3.0 * gamma[k] + b_term;
    bound[k] = c_k / std::sqrt(gamma[k]) *
                   std::sqrt(1.0 + ledger.squared_excess()[k]) +
               2.0 * c_k;
  }
  return finalize_report(TheoremId::C3, std::move(bound),
                         ledger.cumulative_regret(), false);
}

BoundReport bound_theorem4(const RegretLedger& ledger, std::size_t experts,
                           std::size_t rounds) {
  require_experts(ledger, experts);
  require_rounds(ledger, rounds);
  const double K = static_cast<double>(experts);
  const double T = static_cast<double>(rounds);
  std::vector<double> bound(experts);
  for (std::size_t k = 0; k < experts; ++k) {
    bound[k] = std::sqrt(K * (1.0 + std::log(1.0 + T)) *
                         (1.0 + ledger.squared_excess()[k]));
  }
  return finalize_report(TheoremId::T4, std::move(bound),
                         ledger.cumulative_regret(), false);
}

BoundReport bound_variance(const RegretLedger& ledger, XiPair xi,
                           std::size_t experts) {
  require_experts(ledger, experts);
  const double log_k = std::log(static_cast<double>(experts));
  const double T = static_cast<double>(ledger.round_count());
  const bool optimized_pair = xi.xi1 == 2.0 && xi.xi2 == 0.0;
  std::vector<double> bound(experts);
  for (std::size_t k = 0; k < experts; ++k) {
    const double r = ledger.cumulative_regret()[k];
    // Bias-variance identity: sum (r_t - R/T)^2 = sum r_t^2 - R^2/T.
    const double variance =
        T > 0.0
            ? std::max(0.0, ledger.squared_excess()[k] - r * r / T)
            : 0.0;
    bound[k] = xi.xi1 * std::sqrt(log_k * variance) + xi.xi1 * xi.xi1 * log_k +
               xi.xi1 * xi.xi2 * std::sqrt(log_k) + xi.xi2;
  }
  return finalize_report(TheoremId::Eq6, std::move(bound),
                         ledger.cumulative_regret(), !optimized_pair);
}

double solve_quadratic(double a, double c) {
  if (a < 0.0 || c < 0.0) {
    throw NegativeInput("solve_quadratic needs a, c >= 0");
  }
  return std::sqrt(a) + c;
}

BoundReport bound_small_excess(const RegretLedger& ledger, XiPair xi,
                               std::size_t experts) {
  require_experts(ledger, experts);
  const double log_k = std::log(static_cast<double>(experts));
  const double additive = xi.xi2 + 2.0 * xi.xi1 * std::sqrt(xi.xi2 * log_k) +
                          4.0 * xi.xi1 * xi.xi1 * log_k;
  std::vector<double> bound(experts);
  for (std::size_t k = 0; k < experts; ++k) {
    bound[k] =
        2.0 * xi.xi1 * std::sqrt(log_k * ledger.negative_part()[k]) + additive;
  }
  return finalize_report(TheoremId::ISEL, std::move(bound),
                         ledger.cumulative_regret(), false);
}

IidBound bound_iid(XiPair xi, std::size_t experts, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw AlphaOutOfRange("alpha must lie in (0, 1]");
  }
  const double log_k = std::log(static_cast<double>(experts));
  IidBound out;
  out.expected = xi.xi1 * xi.xi1 * log_k / alpha +
                 xi.xi1 * std::sqrt(xi.xi2 * log_k / alpha) + xi.xi2;
  return out;
}

IidBound bound_iid(XiPair xi, std::size_t experts, double alpha,
                   double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DeltaOutOfRange("delta must lie in (0, 1)");
  }
  IidBound out = bound_iid(xi, experts, alpha);
  const double log_k = std::log(static_cast<double>(experts));
  const double log_term =
      std::log(1.0 / delta) +
      std::log(1.0 + 1.0 / (2.0 * kE) * std::log(1.0 + out.expected / 4.0));
  out.high_probability =
      out.expected + 6.0 * xi.xi1 / alpha * std::sqrt(log_term * log_k);
  out.has_high_probability = true;
  return out;
}

BoundReport bound_corollary5(const RegretLedger& inner_ledger,
                             const RegretLedger& outer_ledger, XiPair xi,
                             std::size_t experts) {
  require_experts(inner_ledger, experts);
  require_experts(outer_ledger, experts);
  require_rounds(inner_ledger, outer_ledger.round_count());
  const double log_k = std::log(static_cast<double>(experts));
  std::vector<double> bound(experts);
  for (std::size_t k = 0; k < experts; ++k) {
    bound[k] =
        xi.xi1 * std::sqrt(log_k * inner_ledger.squared_excess()[k]) + xi.xi2;
  }
  return finalize_report(TheoremId::C5, std::move(bound),
                         outer_ledger.confidence_regret(), false);
}

BoundReport bound_mlc_hedge(const RegretLedger& ledger,
                            const LearnerConfig& config,
                            const std::vector<double>& weighted_loss) {
  require_experts(ledger, config.expert_count);
  require_experts(ledger, weighted_loss.size());
  if (!config.fixed_rates.has_value()) {
    throw ConfigMismatch("Theorem 7 needs the fixed rates the run used");
  }
  const std::vector<double> gamma = log_inverse(config.resolved_weights());
  const std::vector<double>& rates = *config.fixed_rates;
  std::vector<double> bound(ledger.expert_count());
  for (std::size_t k = 0; k < bound.size(); ++k) {
    bound[k] = gamma[k] / rates[k] +
               (kE - 1.0) * rates[k] * weighted_loss[k] +
               (kE - 1.0) * gamma[k];
  }
  return finalize_report(TheoremId::T7, std::move(bound),
                         ledger.confidence_regret(), false);
}

}  // namespace bounds
}  // namespace exagg
