#include "merchant/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace merchant {

std::string_view to_string(Semantics semantics) {
  return semantics == Semantics::CG ? "cg" : "mg";
}

Semantics parse_semantics(std::string_view text) {
  if (text == "cg" || text == "CG") return Semantics::CG;
  if (text == "mg" || text == "MG") return Semantics::MG;
  throw std::invalid_argument("semantics must be cg or mg");
}

GameConfig::GameConfig(Rational x, int cost, int horizon, Semantics semantics)
    : x_(x), cost_(cost), horizon_(horizon), semantics_(semantics) {
  if (x_ <= 1) throw std::invalid_argument("x must exceed 1");
  if (cost_ < 0) throw std::invalid_argument("cost must be non-negative");
  if (horizon_ < 1) throw std::invalid_argument("horizon must be at least 1");
}

GameConfig GameConfig::with_semantics(Semantics semantics) const {
  return GameConfig(x_, cost_, horizon_, semantics);
}

ArrivalTime::ArrivalTime(int y, int horizon) : y_(y) {
  if (y < 1 || y > horizon) {
    throw std::invalid_argument("arrival time y=" + std::to_string(y) + " outside [1, " +
                                std::to_string(horizon) + "]");
  }
}

Mixture make_mixture(Rational q) {
  if (q < 0 || q > 1) throw std::invalid_argument("mixture probability q must lie in [0, 1]");
  return Mixture{q};
}

bool is_deterministic(const CanonicalStrategy& strategy) {
  return !std::holds_alternative<Mixture>(strategy);
}

std::string describe(const CanonicalStrategy& strategy) {
  struct Visitor {
    std::string operator()(const PointsOnly&) const { return "points-only"; }
    std::string operator()(const GoldFirst&) const { return "gold-first"; }
    std::string operator()(const Mixture& s) const { return "mixture(q=" + s.q.str() + ")"; }
    std::string operator()(const Prefix& s) const { return "prefix(m=" + std::to_string(s.m) + ")"; }
  };
  return std::visit(Visitor{}, strategy);
}

std::string_view to_string(Action action) {
  switch (action) {
    case Action::HuntGold:
      return "gold";
    case Action::HuntPoint:
      return "point";
    case Action::HuntWithB:
      return "trap_b";
  }
  return "?";
}

GameOutcome play_game(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime arrival) {
  if (!is_deterministic(strategy)) {
    throw std::invalid_argument("play_game needs a deterministic strategy; resolve the mixture first");
  }
  const int y = arrival.value();
  const int c = config.cost();

  // Whether the strategy arms the gold trap at epoch t given current holdings.
  auto wants_gold = [&](int t, int gold) {
    if (t > y) return false;  // the merchant has come and gone
    if (std::holds_alternative<GoldFirst>(strategy)) return gold < c;
    if (const auto* prefix = std::get_if<Prefix>(&strategy)) {
      if (prefix->m < 0 || prefix->m > config.horizon()) {
        throw std::invalid_argument("prefix length m outside [0, T]");
      }
      return t <= prefix->m;
    }
    return false;
  };

  const bool buys = !std::holds_alternative<PointsOnly>(strategy);

  GameOutcome out;
  out.actions.reserve(static_cast<std::size_t>(config.epochs()));
  int gold = 0;
  int point_hunts = 0;
  int trap_hunts = 0;
  for (int t = 1; t <= config.epochs(); ++t) {
    Action action = Action::HuntPoint;
    if (out.bought_trap) {
      action = Action::HuntWithB;
      ++trap_hunts;
    } else if (wants_gold(t, gold)) {
      action = Action::HuntGold;
      ++gold;
    } else {
      ++point_hunts;
    }
    out.actions.push_back(action);
    if (buys && t == y && !out.bought_trap && gold >= c) {
      gold -= c;
      out.bought_trap = true;
    }
  }
  out.gold_remaining = gold;
  out.points = Rational(point_hunts) + config.x() * trap_hunts;
  return out;
}

Rational payoff_points_only(const GameConfig& config) { return config.epochs(); }

Rational payoff_gold_first(const GameConfig& config, ArrivalTime arrival) {
  const int y = arrival.value();
  const int c = config.cost();
  const int T = config.horizon();
  const bool mg = config.semantics() == Semantics::MG;
  if (y >= c) return Rational(y - c) + config.x() * (T - y + (mg ? 1 : 0));
  return T - y + (mg ? 1 : 0);
}

Rational offline_optimal(const GameConfig& config, ArrivalTime arrival) {
  Rational never_buy = payoff_points_only(config);
  if (arrival.value() < config.cost()) return never_buy;
  return std::max(never_buy, payoff_gold_first(config, arrival));
}

Rational strategy_payoff(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime y) {
  if (const auto* mix = std::get_if<Mixture>(&strategy)) {
    return mix->q * payoff_gold_first(config, y) + (1 - mix->q) * payoff_points_only(config);
  }
  if (std::holds_alternative<PointsOnly>(strategy)) return payoff_points_only(config);
  if (std::holds_alternative<GoldFirst>(strategy)) return payoff_gold_first(config, y);
  return play_game(config, strategy, y).points;
}

Rational payoff_ratio(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime y) {
  return strategy_payoff(config, strategy, y) / offline_optimal(config, y);
}

}  // namespace merchant
