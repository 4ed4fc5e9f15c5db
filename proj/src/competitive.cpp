#include "merchant/competitive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace merchant {
namespace {

void require_x(const Rational& x) {
  if (x <= 1) throw std::invalid_argument("x must exceed 1");
}

}  // namespace

DetChoice det_choice(const Rational& x, const Rational& r) {
  require_x(x);
  if (r < 0 || r > 1) throw std::invalid_argument("r must lie in [0, 1]");
  const Rational remaining = 1 - r;
  const Rational premium = x * remaining;
  if (premium <= 1) return {PointsOnly{}, 1};

  const Rational gold_bound = remaining;      // worst case for GoldFirst
  const Rational points_bound = 1 / premium;  // worst case for PointsOnly
  if (gold_bound >= points_bound) return {GoldFirst{}, std::min<Rational>(gold_bound, 1)};
  return {PointsOnly{}, std::min<Rational>(points_bound, 1)};
}

RandChoice randomized_q(const Rational& x, const Rational& r) {
  require_x(x);
  if (r < 0 || r >= 1) throw std::invalid_argument("r must lie in [0, 1)");
  if (x * (1 - r) <= 1) return {0, 1};
  return {randomized_mixing(x, r), randomized_ratio(x, r)};
}

WorstCaseR worst_case_r(const Rational& x) {
  require_x(x);
  const double root = std::sqrt(x.to_double());
  return {1.0 - 1.0 / root, 0.5 * (1.0 + 1.0 / root)};
}

YaoDistribution yao_distribution(const GameConfig& config) {
  if (config.cost() < 2 || config.cost() > config.horizon()) {
    throw std::invalid_argument("two-point arrival distribution needs 2 <= c <= T");
  }
  return {{config.cost() - 1, config.cost()}};
}

Rational yao_expected_ratio(const GameConfig& config, const CanonicalStrategy& strategy) {
  if (config.semantics() != Semantics::CG) {
    throw std::invalid_argument("two-point lower bound is evaluated under CG semantics");
  }
  if (!is_deterministic(strategy)) {
    throw std::invalid_argument("two-point lower bound applies to deterministic strategies");
  }
  const YaoDistribution dist = yao_distribution(config);
  Rational total = 0;
  for (int y : dist.support) {
    const ArrivalTime arrival(y, config);
    total += play_game(config, strategy, arrival).points / offline_optimal(config, arrival);
  }
  return total / 2;
}

}  // namespace merchant
