#ifndef MERCHANT_GAME_HPP
#define MERCHANT_GAME_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "merchant/rational.hpp"

namespace merchant {

/// Epoch accounting convention.
///
/// CG: epochs 1..T. MG: epochs 1..T plus one terminal epoch T+1 at which
/// the merchant never appears.
enum class Semantics { CG, MG };

std::string_view to_string(Semantics semantics);
Semantics parse_semantics(std::string_view text);

/// One problem instance: trap multiplier x > 1, trap cost c >= 0 (gold),
/// horizon T >= 1 (regular epochs).
class GameConfig {
 public:
  GameConfig(Rational x, int cost, int horizon, Semantics semantics = Semantics::CG);

  const Rational& x() const { return x_; }
  int cost() const { return cost_; }
  int horizon() const { return horizon_; }
  Semantics semantics() const { return semantics_; }

  /// Cost-to-horizon ratio c/T.
  Rational r() const { return Rational(cost_, horizon_); }

  /// Number of reward epochs actually played (T, or T+1 under MG).
  int epochs() const { return semantics_ == Semantics::MG ? horizon_ + 1 : horizon_; }

  /// Epochs after epoch t that still yield a reward.
  int epochs_after(int t) const { return epochs() - t; }

  GameConfig with_semantics(Semantics semantics) const;

 private:
  Rational x_;
  int cost_;
  int horizon_;
  Semantics semantics_;
};

/// Merchant arrival epoch y, validated against a horizon.
class ArrivalTime {
 public:
  ArrivalTime(int y, int horizon);
  ArrivalTime(int y, const GameConfig& config) : ArrivalTime(y, config.horizon()) {}

  int value() const { return y_; }

 private:
  int y_;
};

struct PointsOnly {
  friend bool operator==(const PointsOnly&, const PointsOnly&) = default;
};

/// Collect gold until c is held or the merchant has come, buy when
/// affordable, then points (or trap B once owned).
struct GoldFirst {
  friend bool operator==(const GoldFirst&, const GoldFirst&) = default;
};

/// GoldFirst with probability q, PointsOnly otherwise, decided before epoch 1.
struct Mixture {
  Rational q;
  friend bool operator==(const Mixture&, const Mixture&) = default;
};

/// Gold during the first m epochs (never past the arrival epoch), points
/// afterwards, buy at the arrival epoch iff gold >= c.
struct Prefix {
  int m = 0;
  friend bool operator==(const Prefix&, const Prefix&) = default;
};

using CanonicalStrategy = std::variant<PointsOnly, GoldFirst, Mixture, Prefix>;

Mixture make_mixture(Rational q);
bool is_deterministic(const CanonicalStrategy& strategy);
std::string describe(const CanonicalStrategy& strategy);

enum class Action { HuntGold, HuntPoint, HuntWithB };

std::string_view to_string(Action action);

struct GameOutcome {
  Rational points;
  int gold_remaining = 0;
  bool bought_trap = false;
  /// One entry per played epoch (T, or T+1 under MG).
  std::vector<Action> actions;
};

/// Plays a deterministic canonical strategy against a fixed arrival time.
/// Throws std::invalid_argument for Mixture strategies.
GameOutcome play_game(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime y);

Rational payoff_points_only(const GameConfig& config);
Rational payoff_gold_first(const GameConfig& config, ArrivalTime y);

/// Best payoff with y known in advance: max of never buying and gold-first.
Rational offline_optimal(const GameConfig& config, ArrivalTime y);

/// Exact payoff of a (possibly mixed) canonical strategy at arrival y;
/// for Mixture this is the coin-weighted expectation.
Rational strategy_payoff(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime y);

/// strategy_payoff / offline_optimal.
Rational payoff_ratio(const GameConfig& config, const CanonicalStrategy& strategy, ArrivalTime y);

}  // namespace merchant

#endif  // MERCHANT_GAME_HPP
