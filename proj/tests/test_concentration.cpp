#include <doctest.h>

#include <cmath>
#include <vector>

#include "exagg/concentration.hpp"
#include "oracles.hpp"

using namespace exagg;
using namespace exagg::concentration;

TEST_CASE("gamma and the tail bound at frozen points") {
  const double e = std::exp(1.0);
  CHECK(freedman_gamma(0.0) == doctest::Approx(1.0 + 1.0 / (2.0 * e)));
  // Choosing delta = gamma / e makes ln(gamma/delta) = 1: bound 3 + 1 = 4.
  const double delta = freedman_gamma(0.0) / e;
  CHECK(freedman_bound(0.0, 0.0, delta) == doctest::Approx(4.0).epsilon(1e-14));
  // Doubly-logarithmic growth.
  CHECK(freedman_gamma(1e6) / freedman_gamma(1e3) < 2.0);
  CHECK_THROWS_AS(freedman_bound(1.0, 1.0, 0.0), DeltaOutOfRange);
  CHECK_THROWS_AS(freedman_bound(1.0, 1.0, 1.0), DeltaOutOfRange);
  CHECK_THROWS_AS(freedman_bound(-1.0, 1.0, 0.5), NegativeInput);
}

TEST_CASE("power-gap lemma oracle") {
  CHECK(lemma_exp_gap(0.7, 1.0));  // alpha = 1 holds with equality
  CHECK(lemma_exp_gap(1.0 / std::exp(1.0), 2.0));
  CHECK_THROWS_AS(lemma_exp_gap(0.0, 2.0), DomainError);
  CHECK_THROWS_AS(lemma_exp_gap(0.5, 0.9), DomainError);
  for (int i = 1; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double x = 10.0 * i / 100.0;
      const double alpha = 1.0 + 9.0 * j / 100.0;
      CHECK(lemma_exp_gap(x, alpha));
    }
  }
}

TEST_CASE("Riemann-sum lemma oracle") {
  // Empty sequence: 0 <= f(a0).
  CHECK(lemma_riemann(2.0, std::vector<double>{}, RiemannKind::inverse));
  // Harmonic instance: sum_{i<=T} 1/i <= 1 + ln(1+T).
  const std::vector<double> ones(500, 1.0);
  CHECK(lemma_riemann(1.0, ones, RiemannKind::inverse));
  CHECK(lemma_riemann(1.0, ones, RiemannKind::inverse_sqrt));
  CHECK_THROWS_AS(lemma_riemann(0.0, ones, RiemannKind::inverse), DomainError);
  CHECK_THROWS_AS(
      lemma_riemann(1.0, std::vector<double>{1.5}, RiemannKind::inverse),
      DomainError);

  oracle::TestRng rng(23);
  for (std::size_t trial = 0; trial < 300; ++trial) {
    const double a0 = 0.01 + 5.0 * rng.uniform();
    std::vector<double> a(rng.uniform_int(0, 100));
    for (double& v : a) v = rng.uniform();
    CHECK(lemma_riemann(a0, a, RiemannKind::inverse));
    CHECK(lemma_riemann(a0, a, RiemannKind::inverse_sqrt));
  }
}

TEST_CASE("martingale spec validation and closed-form variances") {
  MartingaleSpec spec;
  spec.kind = MartingaleSpec::Kind::fair_coin;
  spec.magnitude = 0.5;
  CHECK(spec.conditional_variance(7) == doctest::Approx(0.25));
  CHECK(spec.expected_sum_variance(1000) == doctest::Approx(250.0));
  spec.magnitude = 1.5;
  CHECK_THROWS_AS(spec.validate(), DomainError);

  MartingaleSpec biased;
  biased.kind = MartingaleSpec::Kind::biased_coin;
  CHECK_NOTHROW(biased.validate());
  // q in (0,1) keeps increments below 1 and variances in closed form.
  for (std::size_t t = 1; t <= 100; ++t) {
    const double v = biased.conditional_variance(t);
    CHECK(v > 0.0);
    CHECK(v <= 0.25);
  }
  biased.bias_swing = 0.6;
  CHECK_THROWS_AS(biased.validate(), DomainError);
}

TEST_CASE("degenerate generator never violates") {
  MartingaleSpec spec;
  spec.kind = MartingaleSpec::Kind::zero;
  CHECK(monte_carlo_violation_rate(spec, 100, 0.05, 200, 1) == 0.0);
}

TEST_CASE("lambda path is nonincreasing and inside (0, 1]") {
  MartingaleSpec spec;
  spec.kind = MartingaleSpec::Kind::biased_coin;
  const MartingalePath path = simulate_path(spec, 500, 2.3, 42, 0);
  for (std::size_t t = 0; t < path.lambda_path.size(); ++t) {
    CHECK(path.lambda_path[t] > 0.0);
    CHECK(path.lambda_path[t] <= 1.0);
    if (t > 0) CHECK(path.lambda_path[t] <= path.lambda_path[t - 1]);
    CHECK(path.increments[t] <= 1.0);
  }
}

TEST_CASE("violation rate stays below delta; potential mean below gamma") {
  MartingaleSpec spec;
  spec.kind = MartingaleSpec::Kind::fair_coin;
  const MonteCarloReport r1 = run_monte_carlo(spec, 1000, 0.05, 2000, 9);
  CHECK(r1.violation_rate <= 0.05);
  CHECK(r1.mean_potential <= r1.gamma + 3.0 * r1.potential_std_error);

  // Matched seeds: a stricter delta cannot see more violations.
  const double loose = monte_carlo_violation_rate(spec, 1000, 0.2, 2000, 9);
  const double strict = monte_carlo_violation_rate(spec, 1000, 0.01, 2000, 9);
  CHECK(strict <= loose);

  // Deterministic given the seed.
  CHECK(monte_carlo_violation_rate(spec, 1000, 0.2, 2000, 9) == loose);
}
