#include "merchant/acceptance.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "merchant/cli.hpp"
#include "merchant/competitive.hpp"
#include "merchant/game.hpp"
#include "merchant/mdp.hpp"
#include "merchant/oracle.hpp"
#include "merchant/unknown_cost.hpp"

namespace merchant::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, timing it and turning exceptions into failures. A non-zero
// budget fails the check when exceeded.
template <class Body>
CheckResult timed(std::string name, double budget_seconds, Body&& body) {
  CheckResult result;
  result.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (result.passed && budget_seconds > 0 && result.seconds > budget_seconds) {
    result.passed = false;
    std::ostringstream os;
    os << "over time budget " << budget_seconds << "s; " << result.detail;
    result.detail = os.str();
  }
  return result;
}

std::string fmt(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

int round_cost(const Rational& r, int horizon) {
  return static_cast<int>((r * horizon + Rational(1, 2)).floor());
}

// Fifty equispaced ratios k/51 in (0, 1).
std::vector<Rational> ratio_grid() {
  std::vector<Rational> grid;
  for (int k = 1; k <= 50; ++k) grid.emplace_back(k, 51);
  return grid;
}

const std::vector<Rational>& competitive_xs() {
  static const std::vector<Rational> xs{2, 4, 9, 100};
  return xs;
}

int competitive_horizon(const Options& options) { return options.quick ? 200 : 1000; }

// Strips markdown bold and returns '*'-prefixed form used by published_table.
std::string normalise_cell(std::string cell) {
  if (cell.size() >= 4 && cell.starts_with("**") && cell.ends_with("**")) {
    return "*" + cell.substr(2, cell.size() - 4);
  }
  return cell;
}

std::vector<std::vector<std::string>> parse_markdown_body(const std::string& markdown) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(markdown);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    if (line_no++ < 2) continue;  // header and separator
    std::vector<std::string> cells;
    std::size_t pos = 1;
    while (pos < line.size()) {
      const std::size_t bar = line.find('|', pos);
      if (bar == std::string::npos) break;
      std::string cell = line.substr(pos, bar - pos);
      const auto first = cell.find_first_not_of(' ');
      const auto last = cell.find_last_not_of(' ');
      cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
      pos = bar + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Rational closed_form_mixing(const Rational& x, const Rational& r) { return randomized_q(x, r).q; }

const std::vector<std::vector<std::string>>& published_table() {
  static const std::vector<std::vector<std::string>> table{
      {"*3", "*4.5", "*6", "*7.5", "*9", "*10.5", "*12", "*13.5", "*15", "*16.5"},
      {"2", "3", "*4.5", "*6", "*7.5", "*9", "*10.5", "*12", "*13.5", "*15"},
      {"2", "3", "4", "5", "6", "*7.3", "*8.7", "*10.2", "*11.7", "*13.2"},
      {"2", "3", "4", "5", "6", "7", "8", "9", "10", "*11.5"},
      {"2", "3", "4", "5", "6", "7", "8", "9", "10", "11"},
      {"2", "3", "4", "5", "6", "7", "8", "9", "10", "11"},
  };
  return table;
}

CheckResult table_reproduction() {
  return timed("1 table reproduction (x=2, c<=5, T<=10)", 1.0, [](CheckResult& out) {
    const MdpTable table = build_paper_table(2, 5, 10);
    const std::string markdown = cli::render_mdp_table(table, cli::TableFormat::Markdown, false);
    const auto rows = parse_markdown_body(markdown);
    const auto& expected = published_table();
    int matched = 0;
    std::string witness;
    for (int c = 0; c <= 5; ++c) {
      for (int T = 1; T <= 10; ++T) {
        const std::string got = normalise_cell(rows.at(static_cast<std::size_t>(c)).at(static_cast<std::size_t>(T)));
        const std::string& want = expected[static_cast<std::size_t>(c)][static_cast<std::size_t>(T - 1)];
        if (got == want) {
          ++matched;
        } else {
          witness += " (c=" + std::to_string(c) + ",T=" + std::to_string(T) + "): got " + got +
                     " [exact " + table.value(c, T).str() + "], reference " + want + ";";
        }
      }
    }
    out.passed = matched == 60;
    out.detail = std::to_string(matched) + "/60 cells match" + (out.passed ? "" : ";" + witness);
  });
}

CheckResult threshold_convergence(const Options&) {
  // The table build is cheap enough to keep T = 2000 in quick mode too.
  return timed("2 threshold convergence (T=2000)", 10.0, [](CheckResult& out) {
    constexpr int kHorizon = 2000;
    out.passed = true;
    for (int x : {2, 4, 9}) {
      const MdpTable table = build_paper_table(x, kHorizon, kHorizon);
      const double empirical = static_cast<double>(empirical_boundary(table, kHorizon)) / kHorizon;
      const double limit = asymptotic_threshold(x);
      const double gap = std::abs(empirical - limit);
      out.detail += "x=" + std::to_string(x) + ": c*/T=" + fmt(empirical) + " vs " + fmt(limit) +
                    " (gap " + fmt(gap, 3) + "); ";
      if (gap > 0.01) out.passed = false;
    }
  });
}

CheckResult deterministic_guarantee(const Options& options) {
  const int T = competitive_horizon(options);
  return timed("3 deterministic guarantee (T=" + std::to_string(T) + ")", 30.0,
               [T](CheckResult& out) {
    out.passed = true;
    for (const Rational& x : competitive_xs()) {
      const double floor = 1.0 / std::sqrt(x.to_double());
      double worst = 1.0;
      for (const Rational& r : ratio_grid()) {
        const int c = round_cost(r, T);
        const GameConfig config(x, c, T);
        const DetChoice choice = det_choice(x, Rational(c, T));
        const AdversaryReport report = exhaustive_adversary(config, choice.strategy);
        const double ratio = report.min_ratio.to_double();
        worst = std::min(worst, ratio);
        if (ratio < floor - 0.01) {
          out.passed = false;
          out.detail += "FAIL x=" + x.str() + " r=" + r.str() + ": " + fmt(ratio) + " < " +
                        fmt(floor) + "-0.01; ";
        }
      }
      const int c_star = static_cast<int>(std::lround((1.0 - floor) * T));
      const GameConfig at_star(x, c_star, T);
      const double star_ratio =
          exhaustive_adversary(at_star, det_choice(x, Rational(c_star, T)).strategy).min_ratio.to_double();
      if (std::abs(star_ratio - floor) > 0.01) {
        out.passed = false;
        out.detail += "FAIL x=" + x.str() + " at r*: " + fmt(star_ratio) + " vs " + fmt(floor) + "; ";
      }
      out.detail += "x=" + x.str() + " min " + fmt(worst, 4) + " (1/sqrt x=" + fmt(floor, 4) +
                    ", at r* " + fmt(star_ratio, 4) + "); ";
    }
  });
}

CheckResult randomized_closed_form(const Options& options, const MixingRule& rule) {
  const int T = competitive_horizon(options);
  return timed("4 randomized closed form (T=" + std::to_string(T) + ")", 30.0,
               [T, &rule](CheckResult& out) {
    out.passed = true;
    for (const Rational& x : competitive_xs()) {
      const Rational upper = (x - 1) / x;
      double oracle_min = 2.0;
      double max_gap = 0.0;
      for (const Rational& r : ratio_grid()) {
        if (r >= upper) continue;
        const int c = round_cost(r, T);
        const GameConfig config(x, c, T);
        const Rational q = rule(x, Rational(c, T));
        const double oracle = exhaustive_adversary(config, Mixture{q}).min_ratio.to_double();
        // Closed form at the instance actually played, c/T, not the grid point.
        const double closed = randomized_q(x, Rational(c, T)).closed_form_ratio.to_double();
        const double gap = std::abs(oracle - closed);
        max_gap = std::max(max_gap, gap);
        oracle_min = std::min(oracle_min, oracle);
        if (gap > 0.01 || oracle <= 0.5) {
          out.passed = false;
          out.detail += "FAIL x=" + x.str() + " r=" + r.str() + ": oracle " + fmt(oracle) +
                        " closed " + fmt(closed) + "; ";
        }
      }

      // Analytic minimum of the closed form over the open domain.
      const double xd = x.to_double();
      const auto ratio_at = [xd](double r) { return randomized_ratio(xd, r); };
      const auto [r_min, value_min] =
          boost::math::tools::brent_find_minima(ratio_at, 0.0, (xd - 1.0) / xd, 52);
      const double floor = 0.5 * (1.0 + 1.0 / std::sqrt(xd));
      if (std::abs(value_min - floor) > 1e-9) {
        out.passed = false;
        out.detail += "FAIL x=" + x.str() + ": closed-form minimum " + fmt(value_min, 12) +
                      " vs " + fmt(floor, 12) + "; ";
      }
      if (x == 4 && std::abs(oracle_min - 0.75) > 0.01) {
        out.passed = false;
        out.detail += "FAIL x=4 oracle minimum " + fmt(oracle_min) + " vs 0.75; ";
      }
      if (x == 100 && std::abs(oracle_min - 0.55) > 0.01) {
        out.passed = false;
        out.detail += "FAIL x=100 oracle minimum " + fmt(oracle_min) + " vs 0.55; ";
      }
      out.detail += "x=" + x.str() + " max gap " + fmt(max_gap, 3) + ", oracle min " +
                    fmt(oracle_min, 4) + ", argmin r " + fmt(r_min, 6) + "; ";
    }
  });
}

CheckResult yao_lower_bound(const Options& options) {
  const int T = competitive_horizon(options);
  return timed("5 two-point lower bound", 0.0, [T](CheckResult& out) {
    out.passed = true;
    {
      const Rational x = 100;
      const int c = T * 9 / 10;
      const GameConfig config(x, c, T);
      const double bound = 0.5 * (1.0 + 1.0 / std::sqrt(x.to_double())) + 2.0 / T;
      for (const CanonicalStrategy& s : {CanonicalStrategy{GoldFirst{}}, CanonicalStrategy{PointsOnly{}}}) {
        const double value = yao_expected_ratio(config, s).to_double();
        out.detail += describe(s) + " " + fmt(value, 5) + " <= " + fmt(bound, 5) + "; ";
        if (value > bound) out.passed = false;
      }
    }
    double slack = 1.0;
    for (int x : {2, 3}) {
      const double base = 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(x)));
      for (int horizon = 2; horizon <= 6; ++horizon) {
        for (int c = 2; c <= horizon; ++c) {
          const GameConfig config(x, c, horizon);
          const double best = yao_best_deterministic(config).value.to_double();
          const double bound = base + 2.0 / horizon;
          slack = std::min(slack, bound - best);
          if (best > bound) {
            out.passed = false;
            out.detail += "FAIL x=" + std::to_string(x) + " c=" + std::to_string(c) +
                          " T=" + std::to_string(horizon) + ": " + fmt(best) + "; ";
          }
        }
      }
    }
    out.detail += "all-policy grid T<=6 min slack " + fmt(slack, 4);
  });
}

CheckResult lemma_equivalence(const Options& options) {
  const int max_t = options.quick ? 6 : kMaxEnumerationHorizon;
  return timed("6 policy-family equivalence (T<=" + std::to_string(max_t) + ")", 60.0,
               [max_t](CheckResult& out) {
    out.passed = true;
    int instances = 0;
    for (const Rational& x : {Rational(3, 2), Rational(2), Rational(3)}) {
      for (int c = 0; c <= 6; ++c) {
        for (int T = 1; T <= max_t; ++T) {
          for (Semantics sem : {Semantics::CG, Semantics::MG}) {
            const GameConfig config(x, c, T, sem);
            const ArrivalPrior prior = ArrivalPrior::uniform(T);
            const Rational dp = exact_dp(config, prior).value;
            const Rational search = enumerate_policies(config).value;
            const Rational canonical = std::max(expected_payoff(config, PointsOnly{}, prior),
                                                expected_payoff(config, GoldFirst{}, prior));
            ++instances;
            if (dp != search || dp != canonical) {
              out.passed = false;
              out.detail += "FAIL x=" + x.str() + " c=" + std::to_string(c) + " T=" +
                            std::to_string(T) + " " + std::string(to_string(sem)) + ": dp " +
                            dp.str() + " search " + search.str() + " canonical " +
                            canonical.str() + "; ";
            }
          }
        }
      }
    }
    out.detail += std::to_string(instances) + " instances, exact equality";
  });
}

CheckResult unknown_cost_variant(const Options& options) {
  std::vector<int> horizons{10, 100};
  if (!options.quick) horizons.push_back(1000);
  return timed("7 unknown-cost variant", 0.0, [horizons](CheckResult& out) {
    out.passed = true;
    long long pairs = 0;
    auto fail = [&out](const std::string& what) {
      out.passed = false;
      if (out.detail.size() < 2000) out.detail += "FAIL " + what + "; ";
    };
    for (const Rational& x : {Rational(3, 2), Rational(2), Rational(3), Rational(10)}) {
      for (int T : horizons) {
        std::vector<int> arrivals;
        if (T == 1000) {
          for (int k = 1; k <= 50; ++k) arrivals.push_back(k * T / 50);
        } else {
          for (int y = 1; y <= T; ++y) arrivals.push_back(y);
        }
        const double xd = x.to_double();
        if (xd >= 1.0 + 1.0 / T) {
          const double a = alpha_prime(xd, T);
          if (!(a > 0.0 && a < 1.0 && a >= 1.0 / xd)) {
            fail("alpha' x=" + x.str() + " T=" + std::to_string(T) + " = " + fmt(a));
          }
        }
        for (int y : arrivals) {
          const UnknownCostInstance in(x, T, y);
          const std::string where = "x=" + x.str() + " T=" + std::to_string(T) + " y=" + std::to_string(y);
          std::vector<Rational> worst(static_cast<std::size_t>(y + 1));
          for (int m = 0; m <= y; ++m) {
            Rational main_min = ratio_for(in, m, in.max_cost());
            bool have_other = false;
            Rational other_min;
            for (int c = 1; c <= in.max_cost(); ++c) {
              const Rational r = ratio_for(in, m, c);
              const int kind = cost_case(in, m, c);
              if (kind == 1 || kind == 3) {
                main_min = std::min(main_min, r);
              } else if (!have_other || r < other_min) {
                other_min = r;
                have_other = true;
              }
            }
            ++pairs;
            const Rational brute = have_other ? std::min(main_min, other_min) : main_min;
            worst[static_cast<std::size_t>(m)] = brute;
            // Library scan re-checked where it is cheap.
            if (T <= 100 && adversary_best_c(in, m).worst_ratio != brute) {
              fail(where + " m=" + std::to_string(m) + ": adversary_best_c disagrees with scan");
            }
            const ReducedBound reduced = reduced_adversary_bound(in, m);
            if (brute != reduced.ratio) {
              fail(where + " m=" + std::to_string(m) + ": brute " + brute.str() + " vs reduced " +
                   reduced.ratio.str());
            }
            if (have_other && other_min < main_min) {
              fail(where + " m=" + std::to_string(m) + ": cases 2/4/5 bind at " + other_min.str());
            }
          }
          const int saturated = saturating_prefix(in);
          const Rational rule = std::max(worst[static_cast<std::size_t>(saturated)], worst[0]);
          const Rational scan = *std::max_element(worst.begin(), worst.end());
          if (scan > rule) fail(where + ": scan " + scan.str() + " beats rule " + rule.str());
          if (in.alpha() < 1 / x) {
            const double ratio = case2_asymptotic_ratio(xd, T);
            if (ratio < 1.0 / (2.0 - 1.0 / T)) fail(where + ": case-2 ratio " + fmt(ratio));
          }
        }
      }
    }
    out.detail += std::to_string(pairs) + " (instance, m) pairs brute-forced over c";
  });
}

CheckResult asymptotic_rate() {
  return timed("8 alpha' asymptotic rate (T=1e6)", 0.0, [](CheckResult& out) {
    out.passed = true;
    for (double x : {1e3, 1e4, 1e5}) {
      const double scaled = alpha_prime(x, 1'000'000) * std::sqrt(x - 1.0);
      out.detail += "x=" + fmt(x) + ": " + fmt(scaled, 6) + "; ";
      if (!(scaled > 0.9 && scaled < 1.1)) out.passed = false;
    }
  });
}

CheckResult endpoint_identities() {
  return timed("9 endpoint identities", 0.0, [](CheckResult& out) {
    out.passed = true;
    for (const Rational& x : {Rational(3, 2), Rational(2), Rational(4), Rational(100)}) {
      const Rational at_zero = randomized_ratio(x, Rational(0));
      const Rational at_edge = randomized_ratio(x, (x - 1) / x);
      out.detail += "x=" + x.str() + ": R(0)=" + at_zero.str() + " R((x-1)/x)=" + at_edge.str() + "; ";
      if (at_zero != 1 || at_edge != 1) out.passed = false;
    }
  });
}

VerifyReport run_all(const Options& options) {
  VerifyReport report;
  report.checks.push_back(table_reproduction());
  report.checks.push_back(threshold_convergence(options));
  report.checks.push_back(deterministic_guarantee(options));
  report.checks.push_back(randomized_closed_form(options));
  report.checks.push_back(yao_lower_bound(options));
  report.checks.push_back(lemma_equivalence(options));
  report.checks.push_back(unknown_cost_variant(options));
  report.checks.push_back(asymptotic_rate());
  report.checks.push_back(endpoint_identities());
  return report;
}

std::string format_line(const CheckResult& check) {
  return std::string(check.passed ? "PASS" : "FAIL") + "  " + check.name + "  " + check.detail +
         "  (" + fmt(check.seconds, 3) + "s)";
}

}  // namespace merchant::acceptance
