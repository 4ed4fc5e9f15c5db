#include "merchant/unknown_cost.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "support/naive_sim.hpp"

namespace merchant {
namespace {

const UnknownCostInstance kInst(3, 10, 8);

TEST(UnknownCostInstance, Basics) {
  EXPECT_EQ(kInst.alpha(), Rational(1, 5));
  EXPECT_EQ(kInst.buy_slack(), 4);
  EXPECT_EQ(kInst.max_cost(), 11);
  EXPECT_THROW(UnknownCostInstance(3, 10, 0), std::invalid_argument);
  EXPECT_THROW(UnknownCostInstance(3, 10, 11), std::invalid_argument);
  EXPECT_THROW(UnknownCostInstance(1, 10, 5), std::invalid_argument);
}

TEST(CostCase, Examples) {
  EXPECT_EQ(cost_case(kInst, 4, 9), 1);
  EXPECT_EQ(ratio_for(kInst, 4, 9), Rational(3, 5));
  EXPECT_EQ(cost_case(kInst, 0, 1), 3);
  EXPECT_EQ(ratio_for(kInst, 0, 1), Rational(10, 13));
  EXPECT_EQ(cost_case(kInst, 2, 2), 5);
  EXPECT_EQ(ratio_for(kInst, 2, 2), 1);
  EXPECT_EQ(cost_case(kInst, 0, 6), 2);
  EXPECT_EQ(cost_case(kInst, 7, 6), 4);
}

TEST(CostCase, RangeChecks) {
  EXPECT_THROW(ratio_for(kInst, -1, 3), std::invalid_argument);
  EXPECT_THROW(ratio_for(kInst, 9, 3), std::invalid_argument);
  EXPECT_THROW(ratio_for(kInst, 2, 0), std::invalid_argument);
  EXPECT_THROW(ratio_for(kInst, 2, 12), std::invalid_argument);
}

TEST(Adversary, Examples) {
  const AdversaryChoice a = adversary_best_c(kInst, 0);
  EXPECT_EQ(a.worst_c, 1);
  EXPECT_EQ(a.worst_ratio, Rational(10, 13));
  const AdversaryChoice b = adversary_best_c(kInst, 4);
  // c = 5 ties every c > y at 3/5; ties go to the smallest cost.
  EXPECT_EQ(b.worst_c, 5);
  EXPECT_EQ(b.worst_ratio, Rational(3, 5));
  EXPECT_EQ(ratio_for(kInst, 4, 9), b.worst_ratio);
  EXPECT_EQ(adversary_best_c(UnknownCostInstance(2, 10, 10), 0).worst_ratio, 1);
}

TEST(ChooseM, Examples) {
  const UnknownCostReport a = choose_m(kInst);
  EXPECT_EQ(a.m, 0);
  EXPECT_EQ(a.worst_ratio, Rational(10, 13));
  EXPECT_EQ(a.case_id, 3);
  EXPECT_TRUE(a.scan_confirms);

  const UnknownCostReport b = choose_m(UnknownCostInstance(2, 10, 2));
  EXPECT_EQ(b.m, 2);
  EXPECT_EQ(b.worst_ratio, Rational(4, 5));
  EXPECT_EQ(ratio_for(UnknownCostInstance(2, 10, 2), 0, 1), Rational(10, 17));

  const UnknownCostInstance thin(Rational(21, 20), 20, 10);
  EXPECT_EQ(saturating_prefix(thin), 0);
  EXPECT_EQ(choose_m(thin).m, 0);
}

TEST(EvaluateM, FixedPrefix) {
  const UnknownCostReport r = evaluate_m(kInst, 4);
  EXPECT_EQ(r.m, 4);
  EXPECT_EQ(r.worst_ratio, Rational(3, 5));
  EXPECT_EQ(r.case_id, 1);
  EXPECT_EQ(r.scan_best_m, 0);
  EXPECT_THROW(evaluate_m(kInst, 9), std::invalid_argument);
}

// ratio_for agrees with an independent replay of prefix play against the
// offline best, and the reduction matches the brute-force minimum.
TEST(UnknownCost, RandomInstances) {
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 400; ++i) {
    const int T = std::uniform_int_distribution<int>(1, 25)(rng);
    const int y = std::uniform_int_distribution<int>(1, T)(rng);
    const Rational x(std::uniform_int_distribution<int>(11, 60)(rng), 10);
    const UnknownCostInstance in(x, T, y);
    for (int m = 0; m <= y; ++m) {
      for (int c = 1; c <= in.max_cost(); ++c) {
        const Rational online = testing::naive_points(x, c, T, y, m, false, false);
        Rational offline = T;
        if (c <= y) offline = std::max(offline, Rational(y - c) + x * (T - y));
        EXPECT_EQ(ratio_for(in, m, c), online / offline) << x << " " << T << " " << y << " " << m << " " << c;
      }
      const Rational brute = adversary_best_c(in, m).worst_ratio;
      EXPECT_EQ(brute, reduced_adversary_bound(in, m).ratio);
    }
    const UnknownCostReport report = choose_m(in);
    EXPECT_TRUE(report.scan_confirms);
    EXPECT_LE(report.scan_best_ratio, report.worst_ratio);
  }
}

TEST(AlphaPrime, Values) {
  EXPECT_NEAR(alpha_prime(2, 10), (-0.9 + std::sqrt(4.81)) / 2, 1e-12);
  EXPECT_NEAR(alpha_prime(1.1, 10), 1.0, 1e-12);
  EXPECT_THROW(alpha_prime(1.05, 10), std::invalid_argument);
  const double scaled = alpha_prime(1e4, 1'000'000) * std::sqrt(1e4 - 1);
  EXPECT_GT(scaled, 0.99);
  EXPECT_LT(scaled, 1.01);
}

// Plugging the equaliser back in balances the two ratios.
TEST(AlphaPrime, Equalises) {
  for (double x : {1.5, 2.0, 7.0, 50.0}) {
    for (int T : {10, 100, 1000}) {
      const double a = alpha_prime(x, T);
      const double r = 1 - a;
      EXPECT_NEAR(1 - r, 1 / (r - 1.0 / T + x * (1 - r)), 1e-12);
      EXPECT_GE(a, 1 / x);
      EXPECT_LT(a, 1.0);
    }
  }
}

TEST(Case2Ratio, Values) {
  EXPECT_NEAR(case2_asymptotic_ratio(2, 10), 2 / 2.8, 1e-12);
  EXPECT_NEAR(case2_asymptotic_ratio(1e12, 10), 1 / 1.9, 1e-9);
  EXPECT_NEAR(case2_asymptotic_ratio(2, 100'000'000), 2.0 / 3, 1e-7);
}

}  // namespace
}  // namespace merchant
