#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exagg/errors.hpp"

namespace exagg {
namespace concentration {

// gamma = 1 + (1/2e) (1 + ln(1 + E[sum V_t]))
double freedman_gamma(double expected_sum_variance);

// One-sided martingale tail bound with the realized cumulative conditional
// variance: 3 sqrt((1 + sum V_t) ln(gamma/delta)) + ln(gamma/delta).
double freedman_bound(double sum_variance, double expected_sum_variance,
                      double delta);

// Lemma oracle: x <= x^alpha + (alpha - 1)/e for x > 0, alpha >= 1,
// checked at absolute tolerance 1e-12.
bool lemma_exp_gap(double x, double alpha);

enum class RiemannKind { inverse, inverse_sqrt };

// Lemma oracle: for a_0 > 0, a_i in [0,1] and f nonincreasing nonnegative,
//   sum_i a_i f(a_0 + ... + a_{i-1}) <= f(a_0) + integral_{a_0}^{a_0+...+a_m} f,
// instantiated for f = 1/x and f = 1/sqrt(x), checked at tolerance 1e-9.
bool lemma_riemann(double a0, std::span<const double> a, RiemannKind kind);

// Martingale difference generators with closed-form conditional variances.
// The tail bound is stated for the true conditional variances, so empirical
// variance substitutes are not accepted here.
struct MartingaleSpec {
  enum class Kind {
    zero,        // X_t = 0
    fair_coin,   // X_t = +-magnitude with equal probability
    biased_coin  // X_t = B_t - q_t, B_t ~ Bernoulli(q_t), q_t time-varying
  };

  Kind kind = Kind::fair_coin;
  double magnitude = 0.5;     // fair_coin step, must be <= 1
  double bias_center = 0.5;   // biased_coin: q_t = center + swing*sin(t/10)
  double bias_swing = 0.3;

  void validate() const;
  double conditional_variance(std::size_t t) const;  // V_t, deterministic
  double expected_sum_variance(std::size_t rounds) const;
  // One increment; pure function of (seed, replication, t).
  double increment(std::size_t t, std::uint64_t seed,
                   std::uint64_t replication) const;
};

// One simulated path plus the predictable Lambda path
// Lambda_t = min{1, sqrt(x / (1 + sum_{s<t} V_s))} for the given x.
struct MartingalePath {
  std::vector<double> increments;
  std::vector<double> conditional_variances;
  std::vector<double> lambda_path;

  double sum_increments() const;
  double sum_variances() const;
};

MartingalePath simulate_path(const MartingaleSpec& spec, std::size_t rounds,
                             double x, std::uint64_t seed,
                             std::uint64_t replication);

// H_T = exp(Lambda_T * sum_t (X_t - phi(Lambda_t)/Lambda_t * V_t)) with
// phi(l) = e^l - l - 1; the proof's supermartingale-style potential.
double path_potential(const MartingalePath& path);

struct MonteCarloReport {
  double violation_rate = 0.0;
  double mean_potential = 0.0;
  double potential_std_error = 0.0;
  double gamma = 0.0;
  double bound_x = 0.0;  // x = ln(gamma/delta) used for the Lambda path
  std::size_t replications = 0;
};

// Runs `replications` independent paths (counter-based seeding, so the
// result does not depend on evaluation order) and reports the fraction on
// which sum X_t exceeds the Freedman bound evaluated at the realized
// sum V_t, together with the sample mean of the potential H_T.
MonteCarloReport run_monte_carlo(const MartingaleSpec& spec,
                                 std::size_t rounds, double delta,
                                 std::size_t replications, std::uint64_t seed);

// Fraction of replications violating the bound; deterministic given seed.
double monte_carlo_violation_rate(const MartingaleSpec& spec,
                                  std::size_t rounds, double delta,
                                  std::size_t replications,
                                  std::uint64_t seed);

}  // namespace concentration
}  // namespace exagg
