#ifndef MERCHANT_TESTS_NAIVE_SIM_HPP
#define MERCHANT_TESTS_NAIVE_SIM_HPP

#include "merchant/rational.hpp"

namespace merchant::testing {

// Epoch-by-epoch replay written independently of the library: gold for the
// first `gold_epochs` epochs up to the merchant's visit. With `stop_at_cost`
// gathering also ends once c is held (gold-first); prefix play keeps going.
inline Rational naive_points(const Rational& x, int c, int T, int y, int gold_epochs,
                             bool stop_at_cost, bool terminal_epoch) {
  const int last = terminal_epoch ? T + 1 : T;
  Rational points = 0;
  int gold = 0;
  bool owns = false;
  for (int t = 1; t <= last; ++t) {
    if (owns) {
      points += x;
    } else if (t <= gold_epochs && t <= y && (!stop_at_cost || gold < c)) {
      ++gold;
    } else {
      points += 1;
    }
    if (t == y && !owns && gold >= c) {
      gold -= c;
      owns = true;
    }
  }
  return points;
}

}  // namespace merchant::testing

#endif  // MERCHANT_TESTS_NAIVE_SIM_HPP
