#include "merchant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "merchant/rng.hpp"

namespace merchant {
namespace {

void require_matching_horizon(const GameConfig& config, const ArrivalPrior& prior) {
  if (prior.horizon() != config.horizon()) {
    throw std::invalid_argument("prior horizon " + std::to_string(prior.horizon()) +
                                " does not match T=" + std::to_string(config.horizon()));
  }
}

// Best total reward from the epochs after t once the merchant has left.
// Each remaining epoch is scored independently, so the per-epoch best action
// (trap B if owned, else a point) is optimal over every action sequence.
Rational departed_value(const GameConfig& config, int t, bool owns_trap) {
  const int rest = config.epochs_after(t);
  return owns_trap ? config.x() * rest : Rational(rest);
}

}  // namespace

ArrivalPrior ArrivalPrior::uniform(int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  return ArrivalPrior(std::vector<Rational>(static_cast<std::size_t>(horizon), Rational(1, horizon)));
}

ArrivalPrior ArrivalPrior::from_weights(std::vector<Rational> weights) {
  if (weights.empty()) throw std::invalid_argument("prior needs at least one arrival time");
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("prior weights must be non-negative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("prior weights sum to " + total.str() + ", not 1");
  return ArrivalPrior(std::move(weights));
}

AdversaryReport exhaustive_adversary(const GameConfig& config, const CanonicalStrategy& strategy,
                                     bool keep_ratios) {
  AdversaryReport report{0, 0, std::nullopt};
  std::vector<Rational> ratios;
  if (keep_ratios) ratios.reserve(static_cast<std::size_t>(config.horizon()));
  for (int y = 1; y <= config.horizon(); ++y) {
    const Rational ratio = payoff_ratio(config, strategy, ArrivalTime(y, config));
    if (y == 1 || ratio < report.min_ratio) {
      report.min_ratio = ratio;
      report.argmin = y;
    }
    if (keep_ratios) ratios.push_back(ratio);
  }
  if (keep_ratios) report.per_choice_ratios = std::move(ratios);
  return report;
}

DpResult exact_dp(const GameConfig& config, const ArrivalPrior& prior) {
  require_matching_horizon(config, prior);
  const int T = config.horizon();
  const int c = config.cost();

  // tail[t] = P(y >= t); the waiting state at epoch t carries that mass.
  std::vector<Rational> tail(static_cast<std::size_t>(T + 2), 0);
  for (int t = T; t >= 1; --t) tail[t] = tail[t + 1] + prior.weight(t);

  // Values are joint (probability-weighted) so no conditioning is needed.
  // Gold beyond c is interchangeable with exactly c, so holdings are capped.
  const int gold_states = c + 1;
  std::vector<Rational> next(static_cast<std::size_t>(gold_states), 0);  // epoch T+1: mass 0
  std::vector<Rational> current(static_cast<std::size_t>(gold_states), 0);
  Action first = Action::HuntPoint;

  for (int t = T; t >= 1; --t) {
    for (int gold = 0; gold < gold_states; ++gold) {
      Rational best;
      Action best_action = Action::HuntPoint;
      for (Action action : {Action::HuntPoint, Action::HuntGold}) {
        const int held = action == Action::HuntGold ? std::min(gold + 1, c) : gold;
        const Rational reward = action == Action::HuntPoint ? tail[t] : Rational(0);
        Rational on_arrival = departed_value(config, t, false);
        if (held >= c) on_arrival = std::max(on_arrival, departed_value(config, t, true));
        const Rational value = reward + prior.weight(t) * on_arrival + next[held];
        if (action == Action::HuntPoint || value > best) {
          best = value;
          best_action = action;
        }
      }
      current[gold] = best;
      if (t == 1 && gold == 0) first = best_action;
    }
    std::swap(current, next);
  }
  return {next[0], first};
}

PolicySearchResult enumerate_policies_weighted(const GameConfig& config,
                                               std::span<const Rational> weights) {
  const int T = config.horizon();
  if (T > kMaxEnumerationHorizon) {
    throw std::invalid_argument("policy enumeration is limited to T <= " +
                                std::to_string(kMaxEnumerationHorizon));
  }
  if (static_cast<int>(weights.size()) != T) {
    throw std::invalid_argument("need one objective weight per arrival time");
  }

  // A deterministic policy is a map from observable states to actions. Until
  // the merchant shows up the state sequence is fixed by the policy itself, so
  // the pre-arrival part of every policy is one gold/point word of length T
  // (under MG the waiting state at the terminal epoch has probability zero).
  // The purchase decision at arrival y sits in a state reached only when the
  // merchant comes at y, so it is chosen independently per y, and after the
  // merchant leaves each epoch is scored on its own (see departed_value).
  PolicySearchResult best{};
  bool have_best = false;
  const std::uint64_t words = std::uint64_t{1} << T;
  for (std::uint64_t word = 0; word < words; ++word) {
    Rational score = 0;
    std::vector<bool> buys(static_cast<std::size_t>(T), false);
    std::uint64_t variants = 1;
    int points = 0;
    int gold = 0;
    for (int y = 1; y <= T; ++y) {
      if ((word >> (y - 1)) & 1U) {
        ++gold;
      } else {
        ++points;
      }
      Rational payoff = Rational(points) + departed_value(config, y, false);
      if (gold >= config.cost()) {
        variants *= 2;
        const Rational with_trap = Rational(points) + departed_value(config, y, true);
        if (with_trap > payoff) {
          payoff = with_trap;
          buys[static_cast<std::size_t>(y - 1)] = true;
        }
      }
      score += weights[static_cast<std::size_t>(y - 1)] * payoff;
    }
    best.policies_examined += variants;
    if (!have_best || score > best.value) {
      have_best = true;
      best.value = score;
      best.buys = std::move(buys);
      best.waiting_actions.clear();
      for (int t = 1; t <= T; ++t) {
        best.waiting_actions.push_back(((word >> (t - 1)) & 1U) ? Action::HuntGold
                                                                   : Action::HuntPoint);
      }
    }
  }
  return best;
}

PolicySearchResult enumerate_policies(const GameConfig& config) {
  if (config.horizon() > kMaxEnumerationHorizon) {
    throw std::invalid_argument("policy enumeration is limited to T <= " +
                                std::to_string(kMaxEnumerationHorizon));
  }
  const ArrivalPrior prior = ArrivalPrior::uniform(config.horizon());
  return enumerate_policies_weighted(config, prior.weights());
}

PolicySearchResult yao_best_deterministic(const GameConfig& config) {
  if (config.semantics() != Semantics::CG) {
    throw std::invalid_argument("two-point lower bound is evaluated under CG semantics");
  }
  const int c = config.cost();
  if (c < 2 || c > config.horizon()) {
    throw std::invalid_argument("two-point arrival distribution needs 2 <= c <= T");
  }
  std::vector<Rational> weights(static_cast<std::size_t>(config.horizon()), 0);
  for (int y : {c - 1, c}) {
    weights[static_cast<std::size_t>(y - 1)] =
        Rational(1, 2) / offline_optimal(config, ArrivalTime(y, config));
  }
  return enumerate_policies_weighted(config, weights);
}

Rational expected_payoff(const GameConfig& config, const CanonicalStrategy& strategy,
                         const ArrivalPrior& prior) {
  require_matching_horizon(config, prior);
  Rational total = 0;
  for (int y = 1; y <= config.horizon(); ++y) {
    if (prior.weight(y) == 0) continue;
    total += prior.weight(y) * strategy_payoff(config, strategy, ArrivalTime(y, config));
  }
  return total;
}

MonteCarloEstimate monte_carlo_estimate(const GameConfig& config, const CanonicalStrategy& strategy,
                                        const ArrivalPrior& prior, std::int64_t trials,
                                        std::uint64_t seed) {
  require_matching_horizon(config, prior);
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  std::vector<double> cdf;
  cdf.reserve(prior.weights().size());
  double running = 0.0;
  for (const Rational& w : prior.weights()) cdf.push_back(running += w.to_double());
  int last_supported = prior.horizon();
  while (last_supported > 1 && prior.weight(last_supported) == 0) --last_supported;

  const auto* mixture = std::get_if<Mixture>(&strategy);
  const double q = mixture ? mixture->q.to_double() : 0.0;

  XorShift64Star rng(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t n = 1; n <= trials; ++n) {
    CanonicalStrategy realised = strategy;
    if (mixture) {
      realised = rng.uniform() < q ? CanonicalStrategy{GoldFirst{}} : CanonicalStrategy{PointsOnly{}};
    }
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    int y = static_cast<int>(it - cdf.begin()) + 1;
    if (y > last_supported) y = last_supported;

    const double payoff = play_game(config, realised, ArrivalTime(y, config)).points.to_double();
    const double delta = payoff - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (payoff - mean);
  }
  const double variance = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
  return {mean, std::sqrt(variance / static_cast<double>(trials)), trials};
}

}  // namespace merchant
