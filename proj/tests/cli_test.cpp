#include "merchant/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "merchant/format.hpp"

namespace merchant::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Invocation& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, MdpTableMarkdownShape) {
  const Invocation r = invoke({"mdp-table", "--x", "2", "--max-c", "5", "--max-t", "10", "--format", "markdown"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("| **11.5** |"), std::string::npos);
  EXPECT_NE(r.out.find("| 2 | 2 | 3 | 4 | 5 | 6 |"), std::string::npos);
  EXPECT_NE(r.out.find("| **7.3** |"), std::string::npos);
  // Header, separator, six rows.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  EXPECT_EQ(invoke({"mdp-table", "--x", "2", "--max-c", "5", "--max-t", "10"}).out, r.out);
}

TEST(Cli, MdpTableCsvRowZero) {
  const Invocation r = invoke({"mdp-table", "--x", "2", "--max-c", "0", "--max-t", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess);
  const io::CsvTable t = io::parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.header.at(4), "g");
  EXPECT_EQ(t.rows[0][4], "3");
  EXPECT_EQ(t.rows[1][4], "4.5");
  EXPECT_EQ(t.rows[2][4], "6");
  EXPECT_EQ(io::write_csv(t), r.out);
}

TEST(Cli, MdpTableExactColumns) {
  const Invocation r = invoke({"mdp-table", "--x", "2", "--max-c", "2", "--max-t", "3", "--format", "csv", "--exact"});
  ASSERT_EQ(r.code, kSuccess);
  const io::CsvTable t = io::parse_csv(r.out);
  EXPECT_EQ(t.header.back(), "exact");
  EXPECT_EQ(io::write_csv(t), r.out);
  const Invocation j = invoke({"mdp-table", "--x", "2", "--max-c", "2", "--max-t", "3", "--format", "json"});
  ASSERT_EQ(j.code, kSuccess);
  EXPECT_NO_THROW(json_of(j));
}

TEST(Cli, RejectsXAtMostOne) {
  const Invocation r = invoke({"mdp-table", "--x", "1", "--max-c", "5", "--max-t", "10"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("x must exceed 1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"mdp-table", "--x", "abc", "--max-c", "1", "--max-t", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"mdp-table", "--x", "2", "--max-c", "1", "--max-t", "1", "--format", "xml"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"ratio-sweep", "--x", "4", "--t", "100", "--steps", "1", "--algo", "rand"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"simulate", "--x", "2", "--c", "3", "--t", "10", "--strategy", "rand", "--m", "2"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"simulate", "--x", "2", "--c", "3", "--t", "10", "--strategy", "prefix"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"simulate", "--x", "2", "--c", "3", "--t", "10", "--y", "11", "--strategy", "gold"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"unknown-cost", "--x", "3", "--t", "10", "--y", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"unknown-cost", "--x", "3", "--t", "10", "--y", "8", "--m", "9"}).code, kUsageError);
}

TEST(Cli, HelpSucceeds) { EXPECT_EQ(invoke({"--help"}).code, kSuccess); }

TEST(Cli, SimulateTrace) {
  const Invocation r = invoke({"simulate", "--x", "2", "--c", "3", "--t", "10", "--y", "5", "--strategy", "gold",
                        "--semantics", "cg"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["points"], 12.0);
  EXPECT_EQ(j["ratio"], 1.0);
  const Invocation early = invoke({"simulate", "--x", "2", "--c", "3", "--t", "10", "--y", "2", "--strategy", "gold",
                            "--semantics", "cg"});
  EXPECT_EQ(json_of(early)["points"], 8.0);
  EXPECT_EQ(json_of(early)["ratio"], 0.8);
}

TEST(Cli, SimulateExpected) {
  const Invocation r = invoke({"simulate", "--x", "2", "--c", "0", "--t", "4", "--strategy", "gold", "--semantics", "mg"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(json_of(r)["expected"], 7.5);
  EXPECT_FALSE(json_of(r).contains("monte_carlo"));
}

TEST(Cli, SimulateMonteCarloReproducible) {
  const std::vector<std::string> args{"simulate", "--x", "3", "--c", "4", "--t", "12", "--strategy", "rand",
                                      "--trials", "2000", "--seed", "9"};
  const Invocation a = invoke(args);
  ASSERT_EQ(a.code, kSuccess) << a.err;
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_EQ(json_of(a)["monte_carlo"]["trials"], 2000);
}

TEST(Cli, SimulateOtherStrategies) {
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"--strategy", "points"}, {"--strategy", "mdp"}, {"--strategy", "det"},
        {"--strategy", "rand", "--q", "1/3"}, {"--strategy", "prefix", "--m", "2"}}) {
    std::vector<std::string> args{"simulate", "--x", "2", "--c", "3", "--t", "10", "--y", "5"};
    args.insert(args.end(), extra.begin(), extra.end());
    const Invocation r = invoke(args);
    EXPECT_EQ(r.code, kSuccess) << extra[1] << ": " << r.err;
  }
}

TEST(Cli, UnknownCost) {
  const auto a = json_of(invoke({"unknown-cost", "--x", "3", "--t", "10", "--y", "8", "--m", "auto"}));
  EXPECT_EQ(a["m"], 0);
  EXPECT_EQ(a["worst_ratio_exact"], "10/13");
  EXPECT_EQ(a["case_id"], 3);
  EXPECT_EQ(a["scan"]["confirms_choice"], true);
  const auto b = json_of(invoke({"unknown-cost", "--x", "2", "--t", "10", "--y", "2", "--m", "auto"}));
  EXPECT_EQ(b["m"], 2);
  EXPECT_EQ(b["worst_ratio_exact"], "4/5");
  const auto c = json_of(invoke({"unknown-cost", "--x", "3", "--t", "10", "--y", "8", "--m", "4"}));
  EXPECT_EQ(c["worst_ratio_exact"], "3/5");
  EXPECT_EQ(c["case_id"], 1);
}

TEST(Cli, RatioSweepCsv) {
  const Invocation r = invoke({"ratio-sweep", "--x", "4", "--t", "200", "--steps", "9", "--algo", "rand"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "r,q,closed_form_ratio,oracle_ratio");
  const io::CsvTable t = io::parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(io::write_csv(t), r.out);
  double prev = -1;
  for (const auto& row : t.rows) {
    const double r_value = Rational::parse(row[0]).to_double();
    EXPECT_GT(r_value, prev);
    prev = r_value;
    EXPECT_GT(std::stod(row[2]), 0.5);
    EXPECT_LE(std::stod(row[2]), 1.0);
  }
}

TEST(Cli, RatioSweepCurves) {
  const RatioCurve rand = ratio_sweep(4, 1000, 50, SweepAlgo::Rand);
  double best = 2;
  double at = 0;
  for (const RatioRow& row : rand.rows) {
    if (row.oracle_ratio < best) {
      best = row.oracle_ratio;
      at = row.r.to_double();
    }
  }
  EXPECT_NEAR(best, 0.75, 0.01);
  EXPECT_NEAR(at, 0.5, 0.05);
  const RatioCurve det = ratio_sweep(4, 1000, 50, SweepAlgo::Det);
  double det_best = 2;
  for (const RatioRow& row : det.rows) det_best = std::min(det_best, row.oracle_ratio);
  EXPECT_NEAR(det_best, 0.5, 0.01);
  EXPECT_NO_THROW(nlohmann::json::parse(render_ratio_curve(det, true)));
}

}  // namespace
}  // namespace merchant::cli
