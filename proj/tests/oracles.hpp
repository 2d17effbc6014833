#pragma once

// Test-side oracles. Everything in this header recomputes quantities from
// raw per-round data with straight loops, independently of the library's
// ledger and bound evaluators, so the two sides can be checked against each
// other.

#include <cmath>
#include <cstdint>
#include <vector>

#include "exagg/types.hpp"

namespace oracle {

// Portable uniform in [0,1): raw mt19937_64 bits, no distribution objects
// (their output is implementation-defined).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  double uniform() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t x = state_;
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + static_cast<std::uint64_t>(uniform() *
                                           static_cast<double>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

// Independent fold of per-round outcomes into the running statistics the
// ledger claims to maintain.
struct FoldStats {
  std::vector<double> cumulative;
  std::vector<double> squared;
  std::vector<double> positive;
  std::vector<double> negative;
  std::vector<double> confidence_weighted;
  std::size_t rounds = 0;

  explicit FoldStats(std::size_t experts)
      : cumulative(experts, 0.0),
        squared(experts, 0.0),
        positive(experts, 0.0),
        negative(experts, 0.0),
        confidence_weighted(experts, 0.0) {}

  void add(const exagg::RoundOutcome& outcome,
           const std::vector<double>* confidences = nullptr) {
    for (std::size_t k = 0; k < cumulative.size(); ++k) {
      const double r = outcome.instantaneous_regrets[k];
      cumulative[k] += r;
      squared[k] += r * r;
      if (r >= 0.0) positive[k] += r;
      if (r < 0.0) negative[k] -= r;
      confidence_weighted[k] += (confidences ? (*confidences)[k] : 1.0) * r;
    }
    ++rounds;
  }
};

// Cumulative aggregate and per-expert losses of a played sequence; the raw
// ingredients of every regret bound's two sides.
struct SequenceTotals {
  double aggregate = 0.0;                 // sum_t p_t . l_t
  std::vector<double> expert_loss;        // sum_t l_{k,t}
  std::vector<double> squared_excess;     // sum_t (agg_t - l_{k,t})^2

  explicit SequenceTotals(std::size_t experts)
      : expert_loss(experts, 0.0), squared_excess(experts, 0.0) {}

  void add(const std::vector<double>& mixture,
           const std::vector<double>& losses) {
    const double agg = dot(mixture, losses);
    aggregate += agg;
    for (std::size_t k = 0; k < losses.size(); ++k) {
      expert_loss[k] += losses[k];
      const double r = agg - losses[k];
      squared_excess[k] += r * r;
    }
  }
};

}  // namespace oracle
