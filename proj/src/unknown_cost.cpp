#include "merchant/unknown_cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace merchant {
namespace {

void check_prefix(const UnknownCostInstance& instance, int m) {
  if (m < 0 || m > instance.arrival()) {
    throw std::invalid_argument("prefix length m=" + std::to_string(m) + " outside [0, y=" +
                                std::to_string(instance.arrival()) + "]");
  }
}

void check_cost(const UnknownCostInstance& instance, int c) {
  if (c < 1 || c > instance.max_cost()) {
    throw std::invalid_argument("cost c=" + std::to_string(c) + " outside [1, T+1]");
  }
}

// Offline payoff when buying at y for cost c.
Rational buy_payoff(const UnknownCostInstance& in, int c) {
  return Rational(in.arrival() - c) + in.x() * (in.horizon() - in.arrival());
}

}  // namespace

UnknownCostInstance::UnknownCostInstance(Rational x, int horizon, int arrival)
    : x_(x), horizon_(horizon), arrival_(arrival) {
  if (x_ <= 1) throw std::invalid_argument("x must exceed 1");
  if (horizon_ < 1) throw std::invalid_argument("horizon must be at least 1");
  (void)ArrivalTime(arrival, horizon);
}

int cost_case(const UnknownCostInstance& in, int m, int c) {
  check_prefix(in, m);
  check_cost(in, c);
  if (c > in.arrival()) return 1;
  const bool worth_it = buy_payoff(in, c) >= in.horizon();
  if (m < c) return worth_it ? 3 : 2;
  return worth_it ? 5 : 4;
}

Rational ratio_for(const UnknownCostInstance& in, int m, int c) {
  check_prefix(in, m);
  check_cost(in, c);
  const int T = in.horizon();
  const int y = in.arrival();
  const Rational online = m >= c ? Rational(y - m) + in.x() * (T - y) : Rational(T - m);
  const Rational offline = c <= y ? std::max<Rational>(T, buy_payoff(in, c)) : Rational(T);
  return online / offline;
}

AdversaryChoice adversary_best_c(const UnknownCostInstance& in, int m) {
  check_prefix(in, m);
  AdversaryChoice best{1, ratio_for(in, m, 1)};
  for (int c = 2; c <= in.max_cost(); ++c) {
    Rational r = ratio_for(in, m, c);
    if (r < best.worst_ratio) best = {c, r};
  }
  return best;
}

ReducedBound reduced_adversary_bound(const UnknownCostInstance& in, int m) {
  check_prefix(in, m);
  const int T = in.horizon();
  const int y = in.arrival();
  ReducedBound out{Rational(T - m, T), 1};
  const int c = m + 1;
  if (c <= y && Rational(c) <= in.buy_slack()) {
    Rational case3 = Rational(T - m) / (Rational(y - m - 1) + in.x() * (T - y));
    if (case3 < out.ratio) out = {case3, 3};
  }
  return out;
}

int saturating_prefix(const UnknownCostInstance& in) {
  const auto slack = in.buy_slack().floor();
  return static_cast<int>(std::min<Rational::int_type>(slack, in.arrival()));
}

UnknownCostReport evaluate_m(const UnknownCostInstance& in, int m) {
  const AdversaryChoice chosen = adversary_best_c(in, m);
  UnknownCostReport report{m, chosen.worst_c, chosen.worst_ratio,
                           reduced_adversary_bound(in, m).binding_case,
                           0, adversary_best_c(in, 0).worst_ratio, false};
  for (int k = 1; k <= in.arrival(); ++k) {
    const Rational r = adversary_best_c(in, k).worst_ratio;
    if (r > report.scan_best_ratio) {
      report.scan_best_ratio = r;
      report.scan_best_m = k;
    }
  }
  report.scan_confirms = report.scan_best_ratio <= report.worst_ratio;
  return report;
}

UnknownCostReport choose_m(const UnknownCostInstance& in) {
  const int saturated = saturating_prefix(in);
  const Rational from_zero = adversary_best_c(in, 0).worst_ratio;
  const Rational from_saturated = adversary_best_c(in, saturated).worst_ratio;
  return evaluate_m(in, from_saturated > from_zero ? saturated : 0);
}

double alpha_prime(double x, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const double inv_t = 1.0 / horizon;
  if (x < 1.0 + inv_t) throw std::invalid_argument("alpha' needs x >= 1 + 1/T");
  const double lead = 1.0 - inv_t;
  return (-lead + std::sqrt(lead * lead + 4.0 * (x - 1.0))) / (2.0 * (x - 1.0));
}

double case2_asymptotic_ratio(double x, int horizon) {
  if (x <= 1.0) throw std::invalid_argument("x must exceed 1");
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  return std::max(1.0 / x, x / (2.0 * x - 1.0 - x / horizon));
}

}  // namespace merchant
