#pragma once

#include <cstddef>
#include <vector>

#include "optimin/game.hpp"

namespace optimin {

/// Which opponent deviations count when evaluating an agreement.
enum class DeviationRule {
  better_response,  // each opponent keeps its strategy or strictly improves
  unrestricted,     // any opponent pure profile (security-level evaluation)
};

/// Strategies strictly improving `player`'s payoff against the others' fixed play.
struct BetterResponseSet {
  std::size_t player = 0;
  PureProfile base;
  std::vector<std::size_t> responses;
};

/// Per-player option lists whose product is the opponents' deviation space.
/// The evaluated player's own entry holds only the agreed strategy.
struct DeviationSpace {
  std::vector<std::vector<std::size_t>> options;
};

struct PureEvaluation {
  PureProfile profile;
  ValueVector value;
  std::vector<PureProfile> witnesses;  // per player: lexicographically smallest minimizer
};

struct MixedEvaluation {
  MixedProfile profile;
  ValueVector value;
  std::vector<MixedProfile> witnesses;
};

BetterResponseSet better_responses(const NormalFormGame& game, const PureProfile& profile, std::size_t player);

DeviationSpace deviation_space(const NormalFormGame& game, const PureProfile& profile, std::size_t player,
                               DeviationRule rule = DeviationRule::better_response);

/// Worst case of each player's payoff over the opponents' deviation space.
PureEvaluation value_pure(const NormalFormGame& game, const PureProfile& profile,
                          DeviationRule rule = DeviationRule::better_response);

/// value_pure on every cell, in cell (lexicographic) order.
std::vector<PureEvaluation> value_table(const NormalFormGame& game, DeviationRule rule = DeviationRule::better_response,
                                        unsigned threads = 1);

/// Pure profiles with Pareto-optimal values. Never empty.
std::vector<PureEvaluation> optimin_pure(const NormalFormGame& game,
                                         DeviationRule rule = DeviationRule::better_response, unsigned threads = 1);

struct MaximinResult {
  std::vector<std::vector<std::size_t>> strategies;     // maximin strategies per player
  ValueVector security;                                 // security level per player
  std::vector<std::vector<Rational>> strategy_security;  // guarantee of each pure strategy
};

/// Pure maximin strategies: maximize the minimum over all opponent pure profiles.
MaximinResult maximin_profile(const NormalFormGame& game);

/// Cells where no player has a strictly better response.
std::vector<PureProfile> nash_pure(const NormalFormGame& game, unsigned threads = 1);

/// Two-player value at a mixed agreement, with mixed deviations.
MixedEvaluation value_mixed_2p(const NormalFormGame& game, const MixedProfile& profile);

struct GridOptimin {
  unsigned resolution = 1;
  std::size_t profiles_evaluated = 0;
  std::vector<MixedEvaluation> points;  // grid-approximate, never exact
};

/// Evaluates every profile whose probabilities are multiples of 1/resolution
/// and keeps the Pareto-optimal ones. Refuses grids above `max_profiles`.
GridOptimin optimin_grid_2p(const NormalFormGame& game, unsigned resolution, unsigned threads = 1,
                            std::size_t max_profiles = 250000);

/// All probability vectors over `strategies` entries with denominators dividing `resolution`.
std::vector<std::vector<Rational>> simplex_grid(std::size_t strategies, unsigned resolution);

bool is_maximin_equilibrium(const NormalFormGame& game, const PureProfile& profile);

}  // namespace optimin
