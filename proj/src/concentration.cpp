#include "exagg/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "exagg/rng.hpp"

namespace exagg {
namespace concentration {

namespace {

const double kE = std::exp(1.0);

double uniform01(std::uint64_t seed, std::uint64_t replication,
                 std::uint64_t t) {
  return rng::uniform01(seed, replication, t);
}

// phi(l)/l = (e^l - l - 1)/l, the coefficient of V_t in the potential.
double phi_over_lambda(double lambda) {
  return (std::expm1(lambda) - lambda) / lambda;
}

}  // namespace

double freedman_gamma(double expected_sum_variance) {
  if (expected_sum_variance < 0.0) {
    throw NegativeInput("expected sum of variances must be nonnegative");
  }
  return 1.0 +
         (1.0 + std::log(1.0 + expected_sum_variance)) / (2.0 * kE);
}

double freedman_bound(double sum_variance, double expected_sum_variance,
                      double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DeltaOutOfRange("delta must lie in (0, 1)");
  }
  if (sum_variance < 0.0) {
    throw NegativeInput("sum of variances must be nonnegative");
  }
  const double log_term =
      std::log(freedman_gamma(expected_sum_variance) / delta);
  return 3.0 * std::sqrt((1.0 + sum_variance) * log_term) + log_term;
}

bool lemma_exp_gap(double x, double alpha) {
  if (!(x > 0.0) || alpha < 1.0) {
    throw DomainError("lemma_exp_gap needs x > 0 and alpha >= 1");
  }
  return x <= std::pow(x, alpha) + (alpha - 1.0) / kE + 1e-12;
}

bool lemma_riemann(double a0, std::span<const double> a, RiemannKind kind) {
  if (!(a0 > 0.0)) throw DomainError("lemma_riemann needs a0 > 0");
  for (double v : a) {
    if (v < 0.0 || v > 1.0) {
      throw DomainError("lemma_riemann needs increments in [0,1]");
    }
  }
  const auto f = [kind](double u) {
    return kind == RiemannKind::inverse ? 1.0 / u : 1.0 / std::sqrt(u);
  };
  double prefix = a0;
  double lhs = 0.0;
  for (double v : a) {
    lhs += v * f(prefix);
    prefix += v;
  }
  const double integral = kind == RiemannKind::inverse
                              ? std::log(prefix / a0)
                              : 2.0 * (std::sqrt(prefix) - std::sqrt(a0));
  return lhs <= f(a0) + integral + 1e-9;
}

void MartingaleSpec::validate() const {
  switch (kind) {
    case Kind::zero:
      return;
    case Kind::fair_coin:
      if (!(magnitude > 0.0) || magnitude > 1.0) {
        throw DomainError("fair coin magnitude must lie in (0, 1]");
      }
      return;
    case Kind::biased_coin:
      if (!(bias_center - bias_swing > 0.0) ||
          !(bias_center + bias_swing < 1.0)) {
        throw DomainError("biased coin needs q_t strictly inside (0, 1)");
      }
      return;
  }
  throw DomainError("unknown martingale kind");
}

double MartingaleSpec::conditional_variance(std::size_t t) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::fair_coin:
      return magnitude * magnitude;
    case Kind::biased_coin: {
      const double q =
          bias_center + bias_swing * std::sin(static_cast<double>(t) / 10.0);
      return q * (1.0 - q);
    }
  }
  return 0.0;
}

double MartingaleSpec::expected_sum_variance(std::size_t rounds) const {
  double total = 0.0;
  for (std::size_t t = 1; t <= rounds; ++t) {
    total += conditional_variance(t);
  }
  return total;
}

double MartingaleSpec::increment(std::size_t t, std::uint64_t seed,
                                 std::uint64_t replication) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::fair_coin:
      return uniform01(seed, replication, t) < 0.5 ? magnitude : -magnitude;
    case Kind::biased_coin: {
      const double q =
          bias_center + bias_swing * std::sin(static_cast<double>(t) / 10.0);
      const double b = uniform01(seed, replication, t) < q ? 1.0 : 0.0;
      return b - q;
    }
  }
  return 0.0;
}

double MartingalePath::sum_increments() const {
  double total = 0.0;
  for (double x : increments) total += x;
  return total;
}

double MartingalePath::sum_variances() const {
  double total = 0.0;
  for (double v : conditional_variances) total += v;
  return total;
}

MartingalePath simulate_path(const MartingaleSpec& spec, std::size_t rounds,
                             double x, std::uint64_t seed,
                             std::uint64_t replication) {
  spec.validate();
  if (!(x > 0.0)) throw DomainError("lambda path needs x > 0");
  MartingalePath path;
  path.increments.resize(rounds);
  path.conditional_variances.resize(rounds);
  path.lambda_path.resize(rounds);
  double variance_prefix = 0.0;  // sum_{s<t} V_s
  for (std::size_t t = 1; t <= rounds; ++t) {
    path.lambda_path[t - 1] =
        std::min(1.0, std::sqrt(x / (1.0 + variance_prefix)));
    path.increments[t - 1] = spec.increment(t, seed, replication);
    path.conditional_variances[t - 1] = spec.conditional_variance(t);
    variance_prefix += path.conditional_variances[t - 1];
  }
  return path;
}

double path_potential(const MartingalePath& path) {
  if (path.increments.empty()) return 1.0;
  double inner = 0.0;
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    inner += path.increments[i] -
             phi_over_lambda(path.lambda_path[i]) *
                 path.conditional_variances[i];
  }
  return std::exp(path.lambda_path.back() * inner);
}

MonteCarloReport run_monte_carlo(const MartingaleSpec& spec,
                                 std::size_t rounds, double delta,
                                 std::size_t replications,
                                 std::uint64_t seed) {
  spec.validate();
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DeltaOutOfRange("delta must lie in (0, 1)");
  }
  const double expected_v = spec.expected_sum_variance(rounds);
  const double gamma = freedman_gamma(expected_v);
  const double x = std::log(gamma / delta);

  std::size_t violations = 0;
  double potential_sum = 0.0;
  double potential_sq_sum = 0.0;
  for (std::size_t rep = 0; rep < replications; ++rep) {
    const MartingalePath path = simulate_path(spec, rounds, x, seed, rep);
    const double realized =
        freedman_bound(path.sum_variances(), expected_v, delta);
    if (path.sum_increments() > realized) ++violations;
    const double h = path_potential(path);
    potential_sum += h;
    potential_sq_sum += h * h;
  }

  MonteCarloReport report;
  report.replications = replications;
  report.gamma = gamma;
  report.bound_x = x;
  report.violation_rate =
      static_cast<double>(violations) / static_cast<double>(replications);
  report.mean_potential = potential_sum / static_cast<double>(replications);
  const double variance = std::max(
      0.0, potential_sq_sum / static_cast<double>(replications) -
               report.mean_potential * report.mean_potential);
  report.potential_std_error =
      std::sqrt(variance / static_cast<double>(replications));
  return report;
}

double monte_carlo_violation_rate(const MartingaleSpec& spec,
                                  std::size_t rounds, double delta,
                                  std::size_t replications,
                                  std::uint64_t seed) {
  return run_monte_carlo(spec, rounds, delta, replications, seed)
      .violation_rate;
}

}  // namespace concentration
}  // namespace exagg
