#ifndef MERCHANT_UNKNOWN_COST_HPP
#define MERCHANT_UNKNOWN_COST_HPP

#include "merchant/game.hpp"
#include "merchant/rational.hpp"

namespace merchant {

/// Known arrival epoch y, adversarial integer cost c. The adversary picks
/// c in [1, T+1]; c = T+1 stands for "nobody can afford it".
class UnknownCostInstance {
 public:
  UnknownCostInstance(Rational x, int horizon, int arrival);

  const Rational& x() const { return x_; }
  int horizon() const { return horizon_; }
  int arrival() const { return arrival_; }

  /// Fraction of the horizon left after the merchant: 1 - y/T.
  Rational alpha() const { return 1 - Rational(arrival_, horizon_); }

  /// (x-1)(T-y): largest cost for which buying beats points-only offline.
  Rational buy_slack() const { return (x_ - 1) * (horizon_ - arrival_); }

  int max_cost() const { return horizon_ + 1; }

  GameConfig game(int cost) const { return GameConfig(x_, cost, horizon_, Semantics::CG); }

 private:
  Rational x_;
  int horizon_;
  int arrival_;
};

/// Which of the five (m, c) regions a pair falls in:
///  1: c > y                      2: m < c <= y, buying not worth it
///  3: m < c <= y, buying worth it 4: m >= c, not worth it   5: m >= c, worth it
int cost_case(const UnknownCostInstance& instance, int m, int c);

/// Online payoff of Prefix(m) over the offline optimum for cost c.
Rational ratio_for(const UnknownCostInstance& instance, int m, int c);

struct AdversaryChoice {
  int worst_c;
  Rational worst_ratio;
};

/// Brute-force minimum of ratio_for over c in [1, T+1]; ties go to the
/// smallest c.
AdversaryChoice adversary_best_c(const UnknownCostInstance& instance, int m);

struct ReducedBound {
  Rational ratio;
  int binding_case;  ///< 1 or 3
};

/// Two-case reduction: (T-m)/T from any c > y, against (T-m)/(y-m-1+x(T-y))
/// at c = m+1 whenever m+1 <= min(y, (x-1)(T-y)).
ReducedBound reduced_adversary_bound(const UnknownCostInstance& instance, int m);

/// The candidate min(floor((x-1)(T-y)), y).
int saturating_prefix(const UnknownCostInstance& instance);

struct UnknownCostReport {
  int m;
  int worst_c;
  Rational worst_ratio;
  int case_id;
  // Full scan over every m in [0, y].
  int scan_best_m;
  Rational scan_best_ratio;
  bool scan_confirms;  ///< no integer m beats the two-candidate choice
};

/// Picks the better of m = saturating_prefix and m = 0 (ties to the smaller
/// m), then confirms by scanning every m in [0, y].
UnknownCostReport choose_m(const UnknownCostInstance& instance);

/// Evaluates a fixed m the same way (scan fields describe the full scan).
UnknownCostReport evaluate_m(const UnknownCostInstance& instance, int m);

/// Equalising remaining-horizon fraction
///   (-1 + 1/T + sqrt((1-1/T)^2 + 4(x-1))) / (2(x-1)),  for x >= 1 + 1/T.
double alpha_prime(double x, int horizon);

/// max(1/x, x / (2x - 1 - x/T)).
double case2_asymptotic_ratio(double x, int horizon);

}  // namespace merchant

#endif  // MERCHANT_UNKNOWN_COST_HPP
