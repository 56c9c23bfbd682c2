#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optimin/rational.hpp"

namespace optimin {

using ValueVector = std::vector<Rational>;

/// One strategy index per player.
using PureProfile = std::vector<std::size_t>;

/// One probability vector per player.
struct MixedProfile {
  std::vector<std::vector<Rational>> probabilities;

  /// Point mass on the given pure profile.
  static MixedProfile degenerate(const PureProfile& profile, const std::vector<std::size_t>& counts);

  bool operator==(const MixedProfile&) const = default;
};

/// Finite n-player game in normal form with a dense, row-major payoff tensor.
/// The last player's strategy index varies fastest; each cell stores n payoffs.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
                 std::vector<Rational> payoffs);

  /// Convenience constructor for two-player bimatrix games.
  static NormalFormGame bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                                 const std::vector<std::vector<std::pair<Rational, Rational>>>& cells,
                                 std::vector<std::string> players = {"1", "2"});

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_strategies(std::size_t player) const { return strategies_.at(player).size(); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  std::size_t num_cells() const { return num_cells_; }

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& strategies() const { return strategies_; }
  const std::string& strategy_label(std::size_t player, std::size_t s) const { return strategies_.at(player).at(s); }
  std::optional<std::size_t> find_strategy(std::size_t player, const std::string& label) const;

  /// Row-major cell index; no range checking.
  std::size_t cell_index(const PureProfile& profile) const;
  PureProfile profile_at(std::size_t cell) const;

  /// Unchecked access to u_player at a cell.
  const Rational& at(std::size_t cell, std::size_t player) const { return payoffs_[cell * players_.size() + player]; }
  const Rational& at(const PureProfile& profile, std::size_t player) const {
    return at(cell_index(profile), player);
  }

  /// Cell index reached by replacing `player`'s strategy in `cell` with `s`.
  std::size_t with_strategy(std::size_t cell, std::size_t player, std::size_t s) const;

  void validate(const PureProfile& profile) const;
  void validate(const MixedProfile& profile) const;

  /// Flat payoff tensor (cells x players).
  const std::vector<Rational>& payoff_tensor() const { return payoffs_; }

  /// Comma-joined strategy labels, e.g. "Top,Left".
  std::string profile_label(const PureProfile& profile) const;
  PureProfile parse_profile(const std::string& text) const;

  bool operator==(const NormalFormGame& other) const;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<Rational> payoffs_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_cells_ = 0;
};

ValueVector payoff(const NormalFormGame& game, const PureProfile& profile);

/// Exact multilinear expectation under independent mixing.
ValueVector expected_payoff(const NormalFormGame& game, const MixedProfile& profile);

/// Replaces u_player by alpha * u_player + beta. alpha must be positive.
NormalFormGame affine_transform(const NormalFormGame& game, std::size_t player, const Rational& alpha,
                                const Rational& beta);

/// The common per-cell payoff sum, if there is one.
std::optional<Rational> constant_sum(const NormalFormGame& game);

/// Adds a player with a single strategy whose payoff makes every cell sum to `constant`.
NormalFormGame fictitious_extension(const NormalFormGame& game, const Rational& constant);

}  // namespace optimin
