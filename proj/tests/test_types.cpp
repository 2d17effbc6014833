#include <doctest.h>

#include <cmath>

#include "exagg/types.hpp"
#include "oracles.hpp"

using namespace exagg;

TEST_CASE("loss vectors rescale affinely into [0,1]") {
  const LossVector l({-0.5, 0.0, -1.0}, -1.0, 0.0);
  CHECK(l[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(l[1] == doctest::Approx(1.0));
  CHECK(l[2] == doctest::Approx(0.0));
  CHECK(l.scale() == 1.0);
  CHECK(l.range_lo() == -1.0);

  CHECK_THROWS_AS(LossVector({0.2, 1.3}), LossOutOfRange);
  CHECK_THROWS_AS(LossVector({-0.2, 0.3}), LossOutOfRange);
  CHECK_THROWS_AS(LossVector(std::vector<double>{}), LossOutOfRange);
  CHECK_THROWS_AS(LossVector({0.5, 2.5}, 0.0, 2.0), LossOutOfRange);
  CHECK_THROWS_AS(LossVector({0.5}, 1.0, 0.0), DomainError);
}

TEST_CASE("confidence vectors require a nonempty active set") {
  CHECK_THROWS_AS(ConfidenceVector({0.0, 0.0}), EmptyActiveSet);
  CHECK_THROWS_AS(ConfidenceVector({0.5, 1.2}), DomainError);
  const ConfidenceVector c({0.0, 0.3});
  CHECK_FALSE(c.active(0));
  CHECK(c.active(1));
}

TEST_CASE("mixtures are simplex points") {
  CHECK_THROWS_AS(MixtureVector({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(MixtureVector({1.5, -0.5}), DomainError);
  CHECK_NOTHROW(MixtureVector({0.25, 0.75}));
  const MixtureVector u = MixtureVector::uniform(4);
  CHECK(u[2] == doctest::Approx(0.25));
  const MixtureVector p = MixtureVector::point_mass(3, 1);
  CHECK(p[1] == 1.0);
  CHECK(p[0] == 0.0);
  CHECK_THROWS_AS(MixtureVector::normalized({0.0, 0.0}), DomainError);
}

TEST_CASE("round outcomes satisfy their defining identities") {
  const LossVector losses({0.2, 0.8, 0.5});
  const RoundOutcome out = make_outcome(MixtureVector({0.5, 0.3, 0.2}), losses);
  CHECK(out.aggregate_loss ==
        doctest::Approx(0.5 * 0.2 + 0.3 * 0.8 + 0.2 * 0.5).epsilon(1e-15));
  // Mixture-weighted instantaneous regrets cancel.
  double weighted = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    weighted += out.mixture[k] * out.instantaneous_regrets[k];
  }
  CHECK(std::abs(weighted) < 1e-12);
}

TEST_CASE("ledger matches an independent fold over random outcomes") {
  oracle::TestRng rng(42);
  const std::size_t K = 5;
  RegretLedger ledger(K);
  oracle::FoldStats fold(K);
  for (std::size_t t = 0; t < 1000; ++t) {
    std::vector<double> losses(K), conf(K);
    for (std::size_t k = 0; k < K; ++k) {
      losses[k] = rng.uniform();
      conf[k] = rng.uniform();
    }
    conf[0] = 1.0;
    std::vector<double> mix(K);
    double total = 0.0;
    for (std::size_t k = 0; k < K; ++k) total += mix[k] = rng.uniform() + 1e-3;
    for (std::size_t k = 0; k < K; ++k) mix[k] /= total;
    const RoundOutcome out =
        make_outcome(MixtureVector(mix), LossVector(losses));
    ledger.record(out, ConfidenceVector(conf));
    fold.add(out, &conf);
  }
  CHECK(ledger.round_count() == 1000);
  for (std::size_t k = 0; k < K; ++k) {
    CHECK(ledger.cumulative_regret()[k] == fold.cumulative[k]);
    CHECK(ledger.squared_excess()[k] == fold.squared[k]);
    CHECK(ledger.positive_part()[k] == fold.positive[k]);
    CHECK(ledger.negative_part()[k] == fold.negative[k]);
    CHECK(ledger.confidence_regret()[k] == fold.confidence_weighted[k]);
    // Decomposition and range facts.
    CHECK(ledger.cumulative_regret()[k] ==
          doctest::Approx(ledger.positive_part()[k] -
                          ledger.negative_part()[k])
              .epsilon(1e-9));
    CHECK(ledger.squared_excess()[k] <=
          static_cast<double>(ledger.round_count()));
  }
}

TEST_CASE("all-ones confidences make both regret notions coincide") {
  RegretLedger ledger(3);
  oracle::TestRng rng(7);
  for (std::size_t t = 0; t < 200; ++t) {
    std::vector<double> losses{rng.uniform(), rng.uniform(), rng.uniform()};
    ledger.record(make_outcome(MixtureVector::uniform(3), LossVector(losses)));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(ledger.confidence_regret()[k] == ledger.cumulative_regret()[k]);
  }
}

TEST_CASE("original-unit regrets scale by the pre-rescale width") {
  RegretLedger ledger(2);
  const LossVector l({-2.0, 0.0}, -4.0, 0.0);  // width 4
  ledger.record(make_outcome(MixtureVector::uniform(2), l), l.scale());
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(ledger.cumulative_regret_original()[k] ==
          doctest::Approx(4.0 * ledger.cumulative_regret()[k]));
  }
}

TEST_CASE("learner config validation") {
  LearnerConfig config;
  config.expert_count = 3;
  CHECK(config.resolved_weights() ==
        std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
  config.initial_weights = {0.2, 0.3, 0.5};
  CHECK(config.resolved_weights() == config.initial_weights);
  SUBCASE("bad weights") {
    config.initial_weights = {0.2, 0.3, 0.4};
    CHECK_THROWS_AS(config.resolved_weights(), ConfigMismatch);
    config.initial_weights = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(config.resolved_weights(), ConfigMismatch);
  }
  SUBCASE("rates") {
    config.initial_weights.clear();
    config.fixed_rates = std::vector<double>{0.5, 0.1, 0.3};
    CHECK(config.resolved_rates(0.5) == *config.fixed_rates);
    config.fixed_rates = std::vector<double>{0.6, 0.1, 0.3};
    CHECK_THROWS_AS(config.resolved_rates(0.5), RateOutOfRange);
    config.fixed_rates = std::vector<double>{0.0, 0.1, 0.3};
    CHECK_THROWS_AS(config.resolved_rates(0.5), RateOutOfRange);
  }
}
