#ifndef MERCHANT_CLI_HPP
#define MERCHANT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "merchant/mdp.hpp"
#include "merchant/rational.hpp"

namespace merchant::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

enum class TableFormat { Markdown, Csv, Json };

/// Markdown: rows c, columns T, display values, bold for strict cells.
/// CSV/JSON: exact rationals (numerator, denominator) plus decimals. With
/// `with_exact` each cell also carries the full-state DP optimum (MG).
std::string render_mdp_table(const MdpTable& table, TableFormat format, bool with_exact);

enum class SweepAlgo { Det, Rand };

struct RatioRow {
  Rational r;
  double q;
  double closed_form_ratio;
  double oracle_ratio;
  int oracle_argmin;
};

/// Closed form against the exhaustive adversary over r in (0, (x-1)/x).
struct RatioCurve {
  Rational x;
  int horizon;
  SweepAlgo algo;
  std::vector<RatioRow> rows;
};

/// r_k = k/(steps+1) * (x-1)/x for k = 1..steps; the oracle plays the
/// instance c = round(r_k * T).
RatioCurve ratio_sweep(const Rational& x, int horizon, int steps, SweepAlgo algo);

/// CSV header is exactly "r,q,closed_form_ratio,oracle_ratio".
std::string render_ratio_curve(const RatioCurve& curve, bool json);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace merchant::cli

#endif  // MERCHANT_CLI_HPP
