#ifndef MERCHANT_ORACLE_HPP
#define MERCHANT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "merchant/game.hpp"
#include "merchant/rational.hpp"

namespace merchant {

/// Distribution of the arrival epoch over [1, T]; weights sum to exactly 1.
class ArrivalPrior {
 public:
  static ArrivalPrior uniform(int horizon);
  /// weights[i] is the probability of y = i + 1.
  static ArrivalPrior from_weights(std::vector<Rational> weights);

  int horizon() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int y) const { return weights_.at(static_cast<std::size_t>(y - 1)); }
  std::span<const Rational> weights() const { return weights_; }

 private:
  explicit ArrivalPrior(std::vector<Rational> weights) : weights_(std::move(weights)) {}
  std::vector<Rational> weights_;
};

struct AdversaryReport {
  Rational min_ratio;
  int argmin;  ///< arrival time y (smallest on ties)
  std::optional<std::vector<Rational>> per_choice_ratios;
};

/// Minimum over y in [1, T] of the strategy's (expected) payoff over the
/// offline optimum. For Mixture the adversary knows q but not the coin.
AdversaryReport exhaustive_adversary(const GameConfig& config, const CanonicalStrategy& strategy,
                                     bool keep_ratios = false);

struct DpResult {
  Rational value;
  Action first_action;
};

/// Backward induction over (epoch, gold, merchant seen, trap owned) with every
/// action allowed at every state, including declining the purchase.
DpResult exact_dp(const GameConfig& config, const ArrivalPrior& prior);

struct PolicySearchResult {
  Rational value;
  /// Best action sequence followed while the merchant has not shown up.
  std::vector<Action> waiting_actions;
  /// Whether the best policy buys at each arrival time where it can afford to.
  std::vector<bool> buys;
  std::uint64_t policies_examined = 0;
};

inline constexpr int kMaxEnumerationHorizon = 8;

/// Exhaustive search over deterministic policies under the uniform prior.
/// Throws std::invalid_argument for T > kMaxEnumerationHorizon.
PolicySearchResult enumerate_policies(const GameConfig& config);

/// Same search with an arbitrary per-arrival objective weight: the score of a
/// policy is sum_y weights[y-1] * payoff(y). Lets callers maximise expected
/// ratio (weights = prior / OPT) as well as expected payoff.
PolicySearchResult enumerate_policies_weighted(const GameConfig& config,
                                               std::span<const Rational> weights);

/// Best expected ratio any deterministic policy achieves when y is c-1 or c
/// with probability 1/2 each (CG semantics, 2 <= c <= T <= 8).
PolicySearchResult yao_best_deterministic(const GameConfig& config);

Rational expected_payoff(const GameConfig& config, const CanonicalStrategy& strategy,
                         const ArrivalPrior& prior);

struct MonteCarloEstimate {
  double mean;
  double standard_error;
  std::int64_t trials;
};

/// Samples the coin (for Mixture) and then y, both from XorShift64Star(seed).
MonteCarloEstimate monte_carlo_estimate(const GameConfig& config, const CanonicalStrategy& strategy,
                                        const ArrivalPrior& prior, std::int64_t trials,
                                        std::uint64_t seed);

}  // namespace merchant

#endif  // MERCHANT_ORACLE_HPP
