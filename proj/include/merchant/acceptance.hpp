#ifndef MERCHANT_ACCEPTANCE_HPP
#define MERCHANT_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "merchant/rational.hpp"

namespace merchant::acceptance {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< summary on success, witness on failure
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool overall() const;
};

struct Options {
  /// Caps horizons at 200 and the policy-enumeration grid at T <= 6.
  bool quick = false;
};

/// Mixing probability used by the randomized strategy; swappable so tests can
/// confirm the check rejects a wrong formula.
using MixingRule = std::function<Rational(const Rational& x, const Rational& r)>;

Rational closed_form_mixing(const Rational& x, const Rational& r);

CheckResult table_reproduction();
CheckResult threshold_convergence(const Options& options);
CheckResult deterministic_guarantee(const Options& options);
CheckResult randomized_closed_form(const Options& options,
                                   const MixingRule& rule = closed_form_mixing);
CheckResult yao_lower_bound(const Options& options);
CheckResult lemma_equivalence(const Options& options);
CheckResult unknown_cost_variant(const Options& options);
CheckResult asymptotic_rate();
CheckResult endpoint_identities();

VerifyReport run_all(const Options& options);

/// "PASS  <name>  <detail>  (<seconds>s)".
std::string format_line(const CheckResult& check);

/// Reference x = 2 value table: display strings,
/// '*' prefix for bold cells. Rows c = 0..5, columns T = 1..10.
const std::vector<std::vector<std::string>>& published_table();

}  // namespace merchant::acceptance

#endif  // MERCHANT_ACCEPTANCE_HPP
