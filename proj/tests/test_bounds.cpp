#include <doctest.h>

#include <cmath>

#include "exagg/bounds.hpp"
#include "oracles.hpp"

using namespace exagg;
using namespace exagg::bounds;

namespace {

// A ledger with chosen per-round instantaneous regrets, for exercising the
// evaluators on crafted statistics. Mixture and aggregate are irrelevant to
// the fold, so any valid filler works.
RegretLedger ledger_from_regrets(
    const std::vector<std::vector<double>>& per_round) {
  const std::size_t K = per_round.front().size();
  RegretLedger ledger(K);
  for (const auto& regrets : per_round) {
    RoundOutcome outcome{MixtureVector::uniform(K), 0.5, regrets};
    ledger.record(outcome);
  }
  return ledger;
}

}  // namespace

TEST_CASE("fixed-rate bound formula") {
  // eta = 1/2, w0 = 1/2, sum r^2 = 10: 2 ln 2 + 5.
  RegretLedger ledger = ledger_from_regrets(
      std::vector<std::vector<double>>(10, {1.0, -1.0}));
  LearnerConfig config;
  config.expert_count = 2;
  config.fixed_rates = std::vector<double>{0.5, 0.5};
  const BoundReport report = bound_theorem1(ledger, config);
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(2.0 * std::log(2.0) + 5.0).epsilon(1e-15));
  CHECK(report.per_expert_bound[0] == doctest::Approx(6.386294361119891));
  // Zero second-order term leaves only the prior cost.
  RegretLedger quiet = ledger_from_regrets({{0.0, 0.0}});
  CHECK(bound_theorem1(quiet, config).per_expert_bound[0] ==
        doctest::Approx(2.0 * std::log(2.0)));
  config.fixed_rates.reset();
  CHECK_THROWS_AS(bound_theorem1(quiet, config), ConfigMismatch);
}

TEST_CASE("adaptive-rate constant and bound formula") {
  // K = 2, T = 1: C = 3 ln 2 + ln(1 + (1/e)(1 + ln 2)).
  const double expected =
      3.0 * std::log(2.0) +
      std::log(1.0 + (1.0 + std::log(2.0)) / std::exp(1.0));
  CHECK(corollary3_constant(2, 1) == doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(corollary3_constant(1, 10), DegenerateK);

  // The doubly-logarithmic growth in T: squaring the horizon barely moves
  // the constant once K is moderately large.
  for (std::size_t K = 4; K <= 10; ++K) {
    const double ratio =
        corollary3_constant(K, 1000000) / corollary3_constant(K, 1000);
    CHECK(ratio < 1.10);
    CHECK(ratio >= 1.0);
  }

  RegretLedger ledger = ledger_from_regrets(
      std::vector<std::vector<double>>(4, {0.5, -0.5}));
  const std::vector<double> w0{0.5, 0.5};
  const BoundReport report = bound_corollary3(ledger, 2, 4, w0);
  const double c = corollary3_constant(2, 4);
  const double log2 = std::log(2.0);
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(c / std::sqrt(log2) * std::sqrt(1.0 + 1.0) + 2.0 * c)
            .epsilon(1e-14));
  CHECK_THROWS_AS(bound_corollary3(ledger, 2, 5, w0), ConfigMismatch);
}

TEST_CASE("polynomial-potential bound formula") {
  // K = 4, T = 99, sum r^2 = 24: sqrt(4 (1 + ln 100) 25) = 10 sqrt(1 + ln 100).
  RegretLedger ledger = ledger_from_regrets(std::vector<std::vector<double>>(
      99, {0.4923659639173309, 0.0, 0.0, 0.0}));
  // 99 * 0.4923659639173309^2 = 24 (the increment is sqrt(24/99)).
  const double r = std::sqrt(24.0 / 99.0);
  ledger = ledger_from_regrets(
      std::vector<std::vector<double>>(99, {r, 0.0, 0.0, 0.0}));
  const BoundReport report = bound_theorem4(ledger, 4, 99);
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(10.0 * std::sqrt(1.0 + std::log(100.0)))
            .epsilon(1e-12));

  // Everything at its floor: K = 1, T = 0 gives exactly 1.
  RegretLedger empty(1);
  CHECK(bound_theorem4(empty, 1, 0).per_expert_bound[0] == doctest::Approx(1.0));
}

TEST_CASE("xi extraction matches its defining formulas") {
  const double c = corollary3_constant(5, 200);
  const XiPair adapt = xi_adapt_ml_prod(5, 200);
  CHECK(adapt.xi1 == doctest::Approx(c / std::sqrt(std::log(5.0))));
  CHECK(adapt.xi2 == doctest::Approx(2.0 * c));

  const XiPair poly = xi_ml_poly(5, 200);
  CHECK(poly.xi1 ==
        doctest::Approx(std::sqrt(5.0 * (1.0 + std::log(201.0)) /
                                  std::log(5.0))));
  CHECK(poly.xi2 == doctest::Approx(poly.xi1 * std::sqrt(std::log(5.0))));
}

TEST_CASE("quadratic inequality lemma") {
  CHECK(solve_quadratic(0.0, 0.0) == 0.0);
  CHECK(solve_quadratic(4.0, 3.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(solve_quadratic(-1.0, 0.0), NegativeInput);
  CHECK_THROWS_AS(solve_quadratic(1.0, -0.5), NegativeInput);
  // The certified value dominates the exact root everywhere on a grid.
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double a = static_cast<double>(i);
      const double c = static_cast<double>(j);
      const double exact_root = 0.5 * (c + std::sqrt(c * c + 4.0 * a));
      CHECK(exact_root <= solve_quadratic(a, c) + 1e-12);
    }
  }
}

TEST_CASE("small-excess-loss bound formula and dominance") {
  // Expert 0 accumulates negative part 9 through rounds with r = -1.
  std::vector<std::vector<double>> rounds(9, {-1.0, 1.0});
  RegretLedger ledger = ledger_from_regrets(rounds);
  const XiPair xi{1.0, 0.0};
  const BoundReport report = bound_small_excess(ledger, xi, 2);
  const double log2 = std::log(2.0);
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(2.0 * std::sqrt(log2 * 9.0) + 4.0 * log2)
            .epsilon(1e-14));
  // No excess-loss rounds: only the additive constant remains.
  CHECK(report.per_expert_bound[1] == doctest::Approx(4.0 * log2));

  // The negative part never exceeds the cumulative loss for losses in [0,1],
  // so the excess-loss form dominates the plain small-loss form.
  oracle::TestRng rng(64);
  for (std::size_t trial = 0; trial < 50; ++trial) {
    double neg = 0.0, loss_sum = 0.0;
    for (std::size_t t = 0; t < 200; ++t) {
      const double agg = rng.uniform();
      const double loss = rng.uniform();
      if (loss >= agg) neg += loss - agg;
      loss_sum += loss;
    }
    CHECK(neg <= loss_sum + 1e-12);
  }
}

TEST_CASE("empirical-variance bound") {
  // Constant increments have zero empirical variance: with the optimized
  // pair the bound collapses to 4 ln 2 at K = 2.
  RegretLedger ledger = ledger_from_regrets(
      std::vector<std::vector<double>>(25, {0.3, -0.3}));
  const BoundReport report = bound_variance(ledger, XiPair{2.0, 0.0}, 2);
  CHECK_FALSE(report.informational);
  // The square root amplifies the float residue of sq - R^2/T (~1e-16) to
  // ~1e-8, hence the looser tolerance.
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-7));

  // Identical losses for both experts: zero regret, same collapse.
  RegretLedger flat = ledger_from_regrets(
      std::vector<std::vector<double>>(25, {0.0, 0.0}));
  const BoundReport quiet = bound_variance(flat, XiPair{2.0, 0.0}, 2);
  CHECK(quiet.per_expert_bound[0] == doctest::Approx(4.0 * std::log(2.0)));
  CHECK(quiet.realized[0] == 0.0);

  // Any other pair is informational.
  CHECK(bound_variance(ledger, XiPair{1.5, 1.0}, 2).informational);
}

TEST_CASE("bias-variance identity against a two-pass oracle") {
  oracle::TestRng rng(12);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t T = rng.uniform_int(2, 300);
    std::vector<std::vector<double>> rounds(T, std::vector<double>(1));
    for (auto& row : rounds) row[0] = 2.0 * rng.uniform() - 1.0;
    RegretLedger ledger = ledger_from_regrets(rounds);

    // Two-pass: mean first, then centered squares.
    double mean = 0.0;
    for (const auto& row : rounds) mean += row[0];
    mean /= static_cast<double>(T);
    double centered = 0.0;
    for (const auto& row : rounds) {
      centered += (row[0] - mean) * (row[0] - mean);
    }
    const double lhs = ledger.squared_excess()[0];
    const double rhs = centered + static_cast<double>(T) * mean * mean;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("hindsight-optimized form is the floor of the tuned family") {
  // min over eta > 0 of gamma/eta + eta s equals 2 sqrt(gamma s); any grid
  // minimum therefore dominates it.
  oracle::TestRng rng(5150);
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const double gamma = 0.1 + 3.0 * rng.uniform();
    const double s = 100.0 * rng.uniform();
    double grid_min = 1e300;
    for (int i = 1; i <= 500; ++i) {
      const double eta = 0.5 * static_cast<double>(i) / 500.0;
      grid_min = std::min(grid_min, gamma / eta + eta * s);
    }
    CHECK(grid_min >= 2.0 * std::sqrt(gamma * s) - 1e-12);
  }
}

TEST_CASE("i.i.d. constant formula and monotonicity") {
  // Xi1 = 0 leaves only Xi2.
  CHECK(bound_iid(XiPair{0.0, 3.5}, 4, 0.7).expected == doctest::Approx(3.5));
  CHECK_THROWS_AS(bound_iid(XiPair{1.0, 1.0}, 4, 0.0), AlphaOutOfRange);
  CHECK_THROWS_AS(bound_iid(XiPair{1.0, 1.0}, 4, 1.5), AlphaOutOfRange);
  CHECK_THROWS_AS(bound_iid(XiPair{1.0, 1.0}, 4, 0.5, 1.5), DeltaOutOfRange);

  // Direct formula evaluation at one point.
  const double log3 = std::log(3.0);
  const XiPair xi{1.25, 2.0};
  const double alpha = 0.5;
  CHECK(bound_iid(xi, 3, alpha).expected ==
        doctest::Approx(1.25 * 1.25 * log3 / alpha +
                        1.25 * std::sqrt(2.0 * log3 / alpha) + 2.0)
            .epsilon(1e-15));

  // Nonincreasing in alpha, and the high-probability value dominates.
  double prev = 1e300;
  for (int i = 1; i <= 10; ++i) {
    const double a = static_cast<double>(i) / 10.0;
    const IidBound b = bound_iid(xi, 3, a, 0.05);
    CHECK(b.expected <= prev + 1e-12);
    CHECK(b.high_probability >= b.expected);
    prev = b.expected;
  }
}

TEST_CASE("confidence-scaled bound terms scale as advertised") {
  // Scaling one expert's confidences by lambda scales that expert's
  // sqrt-term of the reduction bound by exactly lambda...
  const XiPair xi = xi_adapt_ml_prod(3, 500);
  const double log3 = std::log(3.0);
  for (double lambda : {0.1, 0.5}) {
    const double s = 37.25;  // sum_t I^2 r^2 for the unscaled stream
    const double term = xi.xi1 * std::sqrt(log3 * s);
    const double scaled = xi.xi1 * std::sqrt(log3 * lambda * lambda * s);
    CHECK(scaled == doctest::Approx(lambda * term).epsilon(1e-12));
  }

  // ...while the hedge-style bound's loss term scales by lambda outside any
  // root, i.e. only by sqrt(lambda) once optimized over the rate.
  const double e = std::exp(1.0);
  const double weighted_loss = 12.0;
  for (double lambda : {0.1, 0.5}) {
    const double eta_term = (e - 1.0) * 0.3 * weighted_loss;
    const double eta_term_scaled = (e - 1.0) * 0.3 * lambda * weighted_loss;
    CHECK(eta_term_scaled == doctest::Approx(lambda * eta_term).epsilon(1e-12));
    const double optimized = 2.0 * std::sqrt((e - 1.0) * weighted_loss *
                                             std::log(3.0));
    const double optimized_scaled =
        2.0 * std::sqrt((e - 1.0) * lambda * weighted_loss * std::log(3.0));
    CHECK(optimized_scaled ==
          doctest::Approx(std::sqrt(lambda) * optimized).epsilon(1e-12));
  }
}

TEST_CASE("hedge bound formula") {
  // Zero weighted loss at rate 1 and uniform prior: e ln K.
  RegretLedger ledger = ledger_from_regrets({{0.0, 0.0, 0.0}});
  LearnerConfig config;
  config.expert_count = 3;
  config.fixed_rates = std::vector<double>(3, 1.0);
  const BoundReport report =
      bound_mlc_hedge(ledger, config, {0.0, 0.0, 0.0});
  CHECK(report.per_expert_bound[0] ==
        doctest::Approx(std::exp(1.0) * std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("report satisfaction honors the tolerance") {
  RegretLedger ledger = ledger_from_regrets({{0.5, -0.5}});
  LearnerConfig config;
  config.expert_count = 2;
  config.fixed_rates = std::vector<double>{0.5, 0.5};
  BoundReport report = bound_theorem1(ledger, config);
  CHECK(report.all_satisfied());
  // A hair of negative slack within tolerance still counts as satisfied.
  BoundReport shaved = finalize_report(
      TheoremId::T1, {1.0}, {1.0 + 0.5 * kSatisfactionTolerance}, false);
  CHECK(shaved.all_satisfied());
  BoundReport broken = finalize_report(TheoremId::T1, {1.0}, {1.1}, false);
  CHECK_FALSE(broken.all_satisfied());
  CHECK(broken.slack[0] == doctest::Approx(-0.1));
}
