#ifndef MERCHANT_COMPETITIVE_HPP
#define MERCHANT_COMPETITIVE_HPP

#include <array>

#include "merchant/game.hpp"
#include "merchant/rational.hpp"

namespace merchant {

/// Deterministic choice for a known cost ratio r = c/T.
struct DetChoice {
  CanonicalStrategy strategy;
  Rational guaranteed_ratio;
};

/// Randomized choice: play GoldFirst with probability q.
struct RandChoice {
  Rational q;
  Rational closed_form_ratio;
};

/// Two equally likely arrival times {c-1, c}.
struct YaoDistribution {
  std::array<int, 2> support;
};

/// GoldFirst when 1 - r >= 1/(x(1-r)), PointsOnly otherwise; PointsOnly with
/// ratio 1 when x(1-r) <= 1. Requires x > 1 and r in [0, 1].
DetChoice det_choice(const Rational& x, const Rational& r);

/// Closed-form mixing probability q = (x-1-rx)/(x-1-r^2 x) and expected
/// ratio R = (x-1)(1-r)/(x-1-r^2 x). Outside r < (x-1)/x the trap can never
/// pay off and the result is (q = 0, ratio 1). Requires x > 1, r in [0, 1).
RandChoice randomized_q(const Rational& x, const Rational& r);

/// R(x, r) on the domain r < (x-1)/x. Works for Rational and double.
template <class Scalar>
Scalar randomized_ratio(const Scalar& x, const Scalar& r) {
  return (x - 1) * (1 - r) / (x - 1 - r * r * x);
}

template <class Scalar>
Scalar randomized_mixing(const Scalar& x, const Scalar& r) {
  return (x - 1 - r * x) / (x - 1 - r * r * x);
}

struct WorstCaseR {
  double r_star;
  double ratio_floor;
};

/// Minimiser r* = 1 - 1/sqrt(x) of R(x, .) and R(x, r*) = (1 + 1/sqrt(x))/2.
WorstCaseR worst_case_r(const Rational& x);

YaoDistribution yao_distribution(const GameConfig& config);

/// Average ratio of a deterministic strategy over arrivals {c-1, c}, each with
/// probability 1/2. Needs CG semantics and 2 <= c <= T.
Rational yao_expected_ratio(const GameConfig& config, const CanonicalStrategy& strategy);

}  // namespace merchant

#endif  // MERCHANT_COMPETITIVE_HPP
