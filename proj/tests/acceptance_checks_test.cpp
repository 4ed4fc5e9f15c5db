#include "merchant/acceptance.hpp"

#include <gtest/gtest.h>

#include <string>

#include "merchant/competitive.hpp"

namespace merchant::acceptance {
namespace {

TEST(Acceptance, ClosedFormMixingMatchesCompetitive) {
  EXPECT_EQ(closed_form_mixing(4, Rational(1, 2)), randomized_mixing(Rational(4), Rational(1, 2)));
}

// A mixing rule with the rx term's sign flipped must be caught, with a witness.
TEST(Acceptance, SignFlippedMixingIsRejected) {
  const MixingRule flipped = [](const Rational& x, const Rational& r) {
    return (x - 1 + r * x) / (x - 1 - r * r * x);
  };
  const CheckResult result = randomized_closed_form(Options{true}, flipped);
  EXPECT_FALSE(result.passed);
  EXPECT_NE(result.detail.find("FAIL x="), std::string::npos) << result.detail;
  EXPECT_NE(result.detail.find(" r="), std::string::npos);
  EXPECT_EQ(format_line(result).rfind("FAIL", 0), 0u);
}

TEST(Acceptance, QuickChecksPass) {
  const Options quick{true};
  EXPECT_TRUE(randomized_closed_form(quick).passed);
  EXPECT_TRUE(asymptotic_rate().passed);
  EXPECT_TRUE(endpoint_identities().passed);
}

TEST(Acceptance, ReferenceGridShape) {
  const auto& grid = published_table();
  ASSERT_EQ(grid.size(), 6u);
  for (const auto& row : grid) EXPECT_EQ(row.size(), 10u);
  EXPECT_EQ(grid[3][9], "*11.5");
}

TEST(Acceptance, OverallIsConjunction) {
  VerifyReport report;
  EXPECT_TRUE(report.overall());
  report.checks.push_back({"a", true, "", 0});
  report.checks.push_back({"b", false, "", 0});
  EXPECT_FALSE(report.overall());
}

}  // namespace
}  // namespace merchant::acceptance
