#include "merchant/mdp.hpp"

#include <cmath>
#include <stdexcept>

namespace merchant {

std::string_view to_string(Decision decision) {
  return decision == Decision::AimGold ? "aim_gold" : "aim_points";
}

MdpTable::MdpTable(Rational x, int max_cost, int max_horizon)
    : x_(x), max_cost_(max_cost), max_horizon_(max_horizon) {
  const auto cells = static_cast<std::size_t>(max_cost + 1) * static_cast<std::size_t>(max_horizon);
  values_.resize(cells);
  decisions_.resize(cells, Decision::AimPoints);
  strict_.resize(cells, 0);
}

std::size_t MdpTable::index(int c, int T) const {
  if (c < 0 || c > max_cost_ || T < 1 || T > max_horizon_) {
    throw std::out_of_range("(c=" + std::to_string(c) + ", T=" + std::to_string(T) +
                            ") outside the table extents");
  }
  return static_cast<std::size_t>(c) * static_cast<std::size_t>(max_horizon_) +
         static_cast<std::size_t>(T - 1);
}

MdpTable build_paper_table(const Rational& x, int max_cost, int max_horizon) {
  if (x <= 1) throw std::invalid_argument("x must exceed 1");
  if (max_cost < 0) throw std::invalid_argument("max cost must be non-negative");
  if (max_horizon < 1) throw std::invalid_argument("max horizon must be at least 1");

  MdpTable table(x, max_cost, max_horizon);
  const Rational half_gain = (x + 1) / 2;

  auto set = [&](int c, int T, Rational value, bool strict, Decision decision) {
    const std::size_t i = table.index(c, T);
    table.values_[i] = value;
    table.decisions_[i] = decision;
    table.strict_[i] = strict ? 1 : 0;
  };

  for (int T = 1; T <= max_horizon; ++T) {
    const Rational points = T + 1;
    // c = 0: nothing to save for; the buy plan always beats points-only.
    set(0, T, half_gain * (T + 1), true, Decision::AimPoints);
    if (max_cost >= 1) {
      const Rational gold = half_gain * T;
      const bool better = gold > points;
      set(1, T, better ? gold : points, better, better ? Decision::AimGold : Decision::AimPoints);
    }
    for (int c = 2; c <= max_cost; ++c) {
      if (T == 1) {
        set(c, T, 2, false, Decision::AimPoints);
        continue;
      }
      const Rational gold = Rational(T - 1, T) * table.value(c - 1, T - 1) + 1;
      const bool better = gold > points;
      set(c, T, better ? gold : points, better, better ? Decision::AimGold : Decision::AimPoints);
    }
  }
  return table;
}

PolicyEntry policy_at(const MdpTable& table, int c, int T) {
  return {table.decision(c, T), table.value(c, T)};
}

double asymptotic_threshold(const Rational& x) {
  if (x <= 1) throw std::invalid_argument("x must exceed 1");
  return 1.0 - 1.0 / std::sqrt(x.to_double());
}

int empirical_boundary(const MdpTable& table, int T) {
  for (int c = table.max_cost(); c >= 1; --c) {
    if (table.decision(c, T) == Decision::AimGold) return c;
  }
  return 0;
}

std::string display_value(const Rational& value) {
  if (value < 0) return "-" + display_value(-value);
  const Rational::int_type tenths = (value * 10 + Rational(1, 2)).floor();
  const auto whole = tenths / 10;
  const auto frac = tenths % 10;
  std::string out = std::to_string(whole);
  if (frac != 0) out += "." + std::to_string(frac);
  return out;
}

}  // namespace merchant
