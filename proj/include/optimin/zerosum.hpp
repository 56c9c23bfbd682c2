#pragma once

#include <cstddef>
#include <vector>

#include "optimin/game.hpp"

namespace optimin {

/// Two-player game with u_2 = -u_1 in every cell.
class StatisticalGame {
 public:
  explicit StatisticalGame(NormalFormGame game);

  const NormalFormGame& game() const { return game_; }

 private:
  NormalFormGame game_;
};

struct MaximinStrategy {
  std::size_t player = 0;
  std::vector<Rational> mixture;
  Rational value;  // payoff the mixture guarantees to `player`
};

/// Guarantee-maximizing mixture for `player`, solved exactly by LP.
MaximinStrategy maximin_lp(const StatisticalGame& game, std::size_t player);

/// Worst payoff `player`'s mixture can receive against any opponent pure strategy.
Rational guarantee(const StatisticalGame& game, std::size_t player, const std::vector<Rational>& mixture);

/// True iff both components of the profile are maximin strategies.
bool optimin_equals_maximin_check(const StatisticalGame& game, const MixedProfile& profile);

/// The single-toss coin-guessing game against Nature. Rows: never / always /
/// if heads / if tails say p = 1/4; columns: Nature picks p = 1/4 or p = 1/2.
StatisticalGame bulmer_game(unsigned tosses = 1);

}  // namespace optimin
