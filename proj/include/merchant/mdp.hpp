#ifndef MERCHANT_MDP_HPP
#define MERCHANT_MDP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "merchant/rational.hpp"

namespace merchant {

enum class Decision { AimPoints, AimGold };

std::string_view to_string(Decision decision);

struct PolicyEntry {
  Decision decision;
  Rational value;
};

/// Value table g(c,T) and policy table f(c,T) of the uniform-arrival MDP,
/// for c in [0, max_cost] and T in [1, max_horizon]. Immutable once built.
class MdpTable {
 public:
  const Rational& x() const { return x_; }
  int max_cost() const { return max_cost_; }
  int max_horizon() const { return max_horizon_; }

  const Rational& value(int c, int T) const { return values_[index(c, T)]; }
  Decision decision(int c, int T) const { return decisions_[index(c, T)]; }

  /// True iff the plan of buying the trap strictly beats points-only.
  /// Coincides with decision == AimGold except in row c = 0, where no gold
  /// is needed and the buy plan always wins.
  bool strict(int c, int T) const { return strict_[index(c, T)] != 0; }

  friend MdpTable build_paper_table(const Rational& x, int max_cost, int max_horizon);

 private:
  MdpTable(Rational x, int max_cost, int max_horizon);
  std::size_t index(int c, int T) const;

  Rational x_;
  int max_cost_;
  int max_horizon_;
  std::vector<Rational> values_;
  std::vector<Decision> decisions_;
  std::vector<std::uint8_t> strict_;
};

/// Fills the table with the closed-form base cases and the recurrence
///   g(c,T) = max(T+1, (T-1)/T * g(c-1,T-1) + 1)   for c > 1, T > 1,
/// breaking ties towards AimPoints.
MdpTable build_paper_table(const Rational& x, int max_cost, int max_horizon);

/// Stored (f, g) at (c, T). Throws std::out_of_range outside the extents.
PolicyEntry policy_at(const MdpTable& table, int c, int T);

/// Limiting cost ratio below which saving gold is optimal: 1 - 1/sqrt(x).
double asymptotic_threshold(const Rational& x);

/// Largest c >= 1 with f(c,T) = AimGold, or 0 when there is none.
int empirical_boundary(const MdpTable& table, int T);

/// One decimal place, round half up, trailing ".0" dropped ("7.3", "10").
std::string display_value(const Rational& value);

}  // namespace merchant

#endif  // MERCHANT_MDP_HPP
