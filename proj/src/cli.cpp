#include "merchant/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "merchant/acceptance.hpp"
#include "merchant/competitive.hpp"
#include "merchant/format.hpp"
#include "merchant/game.hpp"
#include "merchant/oracle.hpp"
#include "merchant/unknown_cost.hpp"

namespace merchant::cli {
namespace {

using json = nlohmann::ordered_json;

// Validation failures inside a command handler; reported as usage errors.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational exact_cell(const MdpTable& table, int c, int T) {
  const GameConfig config(table.x(), c, T, Semantics::MG);
  return exact_dp(config, ArrivalPrior::uniform(T)).value;
}

std::string markdown_table(const MdpTable& table, bool exact_values) {
  std::vector<std::string> header{"(c,T)"};
  for (int T = 1; T <= table.max_horizon(); ++T) header.push_back(std::to_string(T));
  std::vector<std::vector<std::string>> rows;
  for (int c = 0; c <= table.max_cost(); ++c) {
    std::vector<std::string> row{std::to_string(c)};
    for (int T = 1; T <= table.max_horizon(); ++T) {
      if (exact_values) {
        row.push_back(display_value(exact_cell(table, c, T)));
        continue;
      }
      std::string cell = display_value(table.value(c, T));
      row.push_back(table.strict(c, T) ? "**" + cell + "**" : cell);
    }
    rows.push_back(std::move(row));
  }
  return io::write_markdown(header, rows);
}

std::string csv_table(const MdpTable& table, bool with_exact) {
  io::CsvTable csv;
  csv.header = {"c", "t", "g_num", "g_den", "g", "display", "decision", "strict"};
  if (with_exact) {
    for (const char* col : {"exact_num", "exact_den", "exact"}) csv.header.emplace_back(col);
  }
  for (int c = 0; c <= table.max_cost(); ++c) {
    for (int T = 1; T <= table.max_horizon(); ++T) {
      const Rational& g = table.value(c, T);
      std::vector<std::string> row{std::to_string(c),
                                   std::to_string(T),
                                   std::to_string(g.num()),
                                   std::to_string(g.den()),
                                   io::format_double(g.to_double()),
                                   display_value(g),
                                   std::string(to_string(table.decision(c, T))),
                                   table.strict(c, T) ? "true" : "false"};
      if (with_exact) {
        const Rational e = exact_cell(table, c, T);
        row.push_back(std::to_string(e.num()));
        row.push_back(std::to_string(e.den()));
        row.push_back(io::format_double(e.to_double()));
      }
      csv.rows.push_back(std::move(row));
    }
  }
  return io::write_csv(csv);
}

std::string json_table(const MdpTable& table, bool with_exact) {
  json cells = json::array();
  for (int c = 0; c <= table.max_cost(); ++c) {
    for (int T = 1; T <= table.max_horizon(); ++T) {
      const Rational& g = table.value(c, T);
      json cell{{"c", c},
                {"t", T},
                {"g_num", g.num()},
                {"g_den", g.den()},
                {"g", g.to_double()},
                {"display", display_value(g)},
                {"decision", to_string(table.decision(c, T))},
                {"strict", table.strict(c, T)}};
      if (with_exact) {
        const Rational e = exact_cell(table, c, T);
        cell["exact_num"] = e.num();
        cell["exact_den"] = e.den();
        cell["exact"] = e.to_double();
      }
      cells.push_back(std::move(cell));
    }
  }
  json doc{{"x", table.x().str()},
           {"max_c", table.max_cost()},
           {"max_t", table.max_horizon()},
           {"cells", std::move(cells)}};
  return doc.dump(2) + "\n";
}

json outcome_json(const GameOutcome& outcome) {
  json actions = json::array();
  for (Action a : outcome.actions) actions.push_back(to_string(a));
  return json{{"points", outcome.points.to_double()},
              {"points_exact", outcome.points.str()},
              {"bought_trap", outcome.bought_trap},
              {"gold_remaining", outcome.gold_remaining},
              {"actions", std::move(actions)}};
}

Rational parse_x(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("x must be a rational number such as 2, 3/2 or 1.5");
  }
}

struct SimulateFlags {
  std::string x;
  int c = 0;
  int t = 0;
  std::optional<int> y;
  std::string strategy;
  std::optional<std::string> q;
  std::optional<int> m;
  std::string prior = "uniform";
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::string semantics = "cg";
};

CanonicalStrategy resolve_strategy(const SimulateFlags& f, const GameConfig& config) {
  if (f.m && f.strategy != "prefix") throw UsageError("--m only applies to --strategy prefix");
  if (f.q && f.strategy != "rand") throw UsageError("--q only applies to --strategy rand");
  const Rational& x = config.x();
  const int c = config.cost();
  const int T = config.horizon();
  if (f.strategy == "points") return PointsOnly{};
  if (f.strategy == "gold") return GoldFirst{};
  if (f.strategy == "mdp") {
    const MdpTable table = build_paper_table(x, c, T);
    return table.strict(c, T) ? CanonicalStrategy{GoldFirst{}} : CanonicalStrategy{PointsOnly{}};
  }
  if (f.strategy == "det") {
    if (c > T) return PointsOnly{};
    return det_choice(x, config.r()).strategy;
  }
  if (f.strategy == "rand") {
    if (f.q) return make_mixture(Rational::parse(*f.q));
    if (c >= T) return Mixture{0};
    return Mixture{randomized_q(x, config.r()).q};
  }
  if (f.strategy == "prefix") {
    if (!f.m) throw UsageError("--strategy prefix requires --m");
    if (*f.m < 0 || *f.m > T) throw UsageError("--m must lie in [0, T]");
    return Prefix{*f.m};
  }
  throw UsageError("unknown strategy '" + f.strategy + "'");
}

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  if (f.prior != "uniform") throw UsageError("only --prior uniform is supported");
  if (f.y && f.trials) throw UsageError("--trials applies only when --y is omitted");
  const GameConfig config(parse_x(f.x), f.c, f.t, parse_semantics(f.semantics));
  const CanonicalStrategy strategy = resolve_strategy(f, config);

  json doc{{"x", config.x().str()},
           {"c", config.cost()},
           {"t", config.horizon()},
           {"semantics", to_string(config.semantics())},
           {"strategy", describe(strategy)}};
  if (f.y) {
    const ArrivalTime y(*f.y, config);
    const Rational payoff = strategy_payoff(config, strategy, y);
    const Rational ratio = payoff / offline_optimal(config, y);
    doc["y"] = y.value();
    doc["points"] = payoff.to_double();
    doc["points_exact"] = payoff.str();
    doc["offline_optimal"] = offline_optimal(config, y).str();
    doc["ratio"] = ratio.to_double();
    doc["ratio_exact"] = ratio.str();
    if (is_deterministic(strategy)) {
      doc["trace"] = outcome_json(play_game(config, strategy, y));
    } else {
      doc["branches"] = json{{"gold_first", outcome_json(play_game(config, GoldFirst{}, y))},
                             {"points_only", outcome_json(play_game(config, PointsOnly{}, y))}};
    }
  } else {
    const ArrivalPrior prior = ArrivalPrior::uniform(config.horizon());
    const Rational expected = expected_payoff(config, strategy, prior);
    doc["prior"] = f.prior;
    doc["expected"] = expected.to_double();
    doc["expected_exact"] = expected.str();
    if (f.trials) {
      if (*f.trials < 1) throw UsageError("--trials must be positive");
      const MonteCarloEstimate mc = monte_carlo_estimate(config, strategy, prior, *f.trials, f.seed);
      doc["monte_carlo"] = json{{"mean", mc.mean},
                                {"standard_error", mc.standard_error},
                                {"trials", mc.trials},
                                {"seed", f.seed},
                                {"generator", "xorshift64*"}};
    }
  }
  out << doc.dump(2) << "\n";
  return kSuccess;
}

int cmd_unknown_cost(const std::string& x_text, int t, int y, const std::string& m_text,
                     std::ostream& out) {
  const UnknownCostInstance in(parse_x(x_text), t, y);
  UnknownCostReport report{};
  if (m_text == "auto") {
    report = choose_m(in);
  } else {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(m_text, &used);
      if (used != m_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--m must be 'auto' or a non-negative integer");
    }
    if (m < 0 || m > y) throw UsageError("--m must lie in [0, y]");
    report = evaluate_m(in, m);
  }
  json doc{{"x", in.x().str()},
           {"t", in.horizon()},
           {"y", in.arrival()},
           {"m_mode", m_text == "auto" ? "auto" : "fixed"},
           {"m", report.m},
           {"worst_c", report.worst_c},
           {"worst_ratio", report.worst_ratio.to_double()},
           {"worst_ratio_exact", report.worst_ratio.str()},
           {"case_id", report.case_id},
           {"candidates", json{{"saturating_prefix", saturating_prefix(in)}, {"zero", 0}}},
           {"scan", json{{"best_m", report.scan_best_m},
                         {"best_ratio", report.scan_best_ratio.to_double()},
                         {"best_ratio_exact", report.scan_best_ratio.str()},
                         {"confirms_choice", report.scan_confirms}}}};
  out << doc.dump(2) << "\n";
  return kSuccess;
}

int cmd_verify(bool quick, std::ostream& out) {
  const acceptance::VerifyReport report = acceptance::run_all({quick});
  for (const auto& check : report.checks) out << acceptance::format_line(check) << "\n";
  const bool ok = report.overall();
  out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

std::string render_mdp_table(const MdpTable& table, TableFormat format, bool with_exact) {
  switch (format) {
    case TableFormat::Markdown: {
      std::string out = markdown_table(table, false);
      if (with_exact) {
        out += "\nExact optimum over all policies (full-state DP, MG semantics):\n\n";
        out += markdown_table(table, true);
      }
      return out;
    }
    case TableFormat::Csv:
      return csv_table(table, with_exact);
    case TableFormat::Json:
      return json_table(table, with_exact);
  }
  return {};
}

RatioCurve ratio_sweep(const Rational& x, int horizon, int steps, SweepAlgo algo) {
  if (x <= 1) throw std::invalid_argument("x must exceed 1");
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (steps < 2) throw std::invalid_argument("steps must be at least 2");
  RatioCurve curve{x, horizon, algo, {}};
  const Rational upper = (x - 1) / x;
  for (int k = 1; k <= steps; ++k) {
    const Rational r = Rational(k, steps + 1) * upper;
    const int c = static_cast<int>((r * horizon + Rational(1, 2)).floor());
    const GameConfig config(x, c, horizon);
    const Rational instance_r(c, horizon);
    RatioRow row{r, 0.0, 0.0, 0.0, 0};
    CanonicalStrategy strategy;
    if (algo == SweepAlgo::Det) {
      const DetChoice closed = det_choice(x, r);
      row.q = std::holds_alternative<GoldFirst>(closed.strategy) ? 1.0 : 0.0;
      row.closed_form_ratio = closed.guaranteed_ratio.to_double();
      strategy = det_choice(x, instance_r).strategy;
    } else {
      const RandChoice closed = randomized_q(x, r);
      row.q = closed.q.to_double();
      row.closed_form_ratio = closed.closed_form_ratio.to_double();
      strategy = Mixture{randomized_q(x, instance_r).q};
    }
    const AdversaryReport report = exhaustive_adversary(config, strategy);
    row.oracle_ratio = report.min_ratio.to_double();
    row.oracle_argmin = report.argmin;
    curve.rows.push_back(row);
  }
  return curve;
}

std::string render_ratio_curve(const RatioCurve& curve, bool as_json) {
  if (as_json) {
    json rows = json::array();
    for (const RatioRow& row : curve.rows) {
      rows.push_back(json{{"r", row.r.str()},
                          {"r_decimal", row.r.to_double()},
                          {"q", row.q},
                          {"closed_form_ratio", row.closed_form_ratio},
                          {"oracle_ratio", row.oracle_ratio},
                          {"oracle_argmin_y", row.oracle_argmin}});
    }
    json doc{{"x", curve.x.str()},
             {"t", curve.horizon},
             {"algo", curve.algo == SweepAlgo::Det ? "det" : "rand"},
             {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
  }
  io::CsvTable csv;
  csv.header = {"r", "q", "closed_form_ratio", "oracle_ratio"};
  for (const RatioRow& row : curve.rows) {
    csv.rows.push_back({row.r.str(), io::format_double(row.q),
                        io::format_double(row.closed_form_ratio),
                        io::format_double(row.oracle_ratio)});
  }
  return io::write_csv(csv);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Merchant-arrival online decision problem: tables, sweeps, simulation, verification",
               "merchant"};
  app.require_subcommand(1);

  std::string x_text;
  int max_c = 5;
  int max_t = 10;
  std::string format = "markdown";
  bool exact = false;
  auto* table_cmd = app.add_subcommand("mdp-table", "Value/policy table of the uniform-arrival MDP");
  table_cmd->add_option("--x", x_text, "Trap multiplier (rational > 1)")->required();
  table_cmd->add_option("--max-c", max_c, "Largest cost row")->capture_default_str();
  table_cmd->add_option("--max-t", max_t, "Largest horizon column")->capture_default_str();
  table_cmd->add_option("--format", format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))
      ->capture_default_str();
  table_cmd->add_flag("--exact", exact, "Also emit the exact all-policy optimum per cell");

  int sweep_t = 1000;
  int steps = 50;
  std::string algo = "rand";
  std::string sweep_format = "csv";
  auto* sweep_cmd = app.add_subcommand("ratio-sweep", "Competitive ratio over r = c/T");
  sweep_cmd->add_option("--x", x_text, "Trap multiplier (rational > 1)")->required();
  sweep_cmd->add_option("--t", sweep_t, "Horizon used by the exhaustive adversary")->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "Number of r samples (>= 2)")->capture_default_str();
  sweep_cmd->add_option("--algo", algo, "det or rand")
      ->check(CLI::IsMember({"det", "rand"}))
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  SimulateFlags sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Play one strategy exactly (and optionally sample it)");
  sim_cmd->add_option("--x", sim.x, "Trap multiplier (rational > 1)")->required();
  sim_cmd->add_option("--c", sim.c, "Trap cost")->required();
  sim_cmd->add_option("--t", sim.t, "Horizon")->required();
  sim_cmd->add_option("--y", sim.y, "Arrival time; omit for the uniform expectation");
  sim_cmd->add_option("--strategy", sim.strategy, "points, gold, mdp, det, rand or prefix")
      ->required()
      ->check(CLI::IsMember({"points", "gold", "mdp", "det", "rand", "prefix"}));
  sim_cmd->add_option("--q", sim.q, "Gold-first probability for rand (default: closed form)");
  sim_cmd->add_option("--m", sim.m, "Gold prefix length for prefix");
  sim_cmd->add_option("--prior", sim.prior, "Arrival prior")->check(CLI::IsMember({"uniform"}));
  sim_cmd->add_option("--trials", sim.trials, "Monte Carlo trials");
  sim_cmd->add_option("--seed", sim.seed, "Monte Carlo seed")->capture_default_str();
  sim_cmd->add_option("--semantics", sim.semantics, "cg or mg")
      ->check(CLI::IsMember({"cg", "mg"}))
      ->capture_default_str();

  int uc_t = 0;
  int uc_y = 0;
  std::string uc_m = "auto";
  auto* uc_cmd = app.add_subcommand("unknown-cost", "Known arrival, adversarial cost");
  uc_cmd->add_option("--x", x_text, "Trap multiplier (rational > 1)")->required();
  uc_cmd->add_option("--t", uc_t, "Horizon")->required();
  uc_cmd->add_option("--y", uc_y, "Known arrival time")->required();
  uc_cmd->add_option("--m", uc_m, "'auto' or a fixed gold prefix length")->capture_default_str();

  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run every acceptance check");
  verify_cmd->add_flag("--quick", quick, "Reduced scale (T <= 200, enumeration T <= 6)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (*table_cmd) {
      if (max_c < 0) throw UsageError("--max-c must be non-negative");
      if (max_t < 1) throw UsageError("--max-t must be at least 1");
      const MdpTable table = build_paper_table(parse_x(x_text), max_c, max_t);
      const TableFormat fmt = format == "csv"    ? TableFormat::Csv
                              : format == "json" ? TableFormat::Json
                                                 : TableFormat::Markdown;
      out << render_mdp_table(table, fmt, exact);
      return kSuccess;
    }
    if (*sweep_cmd) {
      const RatioCurve curve =
          ratio_sweep(parse_x(x_text), sweep_t, steps, algo == "det" ? SweepAlgo::Det : SweepAlgo::Rand);
      out << render_ratio_curve(curve, sweep_format == "json");
      return kSuccess;
    }
    if (*sim_cmd) return cmd_simulate(sim, out);
    if (*uc_cmd) return cmd_unknown_cost(x_text, uc_t, uc_y, uc_m, out);
    if (*verify_cmd) return cmd_verify(quick, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace merchant::cli
