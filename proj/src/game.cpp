#include "optimin/game.hpp"

#include <algorithm>
#include <sstream>

#include "optimin/error.hpp"

namespace optimin {

MixedProfile MixedProfile::degenerate(const PureProfile& profile, const std::vector<std::size_t>& counts) {
  MixedProfile mixed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    std::vector<Rational> p(counts[i], Rational(0));
    p.at(profile.at(i)) = 1;
    mixed.probabilities.push_back(std::move(p));
  }
  return mixed;
}

NormalFormGame::NormalFormGame(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
                               std::vector<Rational> payoffs)
    : players_(std::move(players)), strategies_(std::move(strategies)), payoffs_(std::move(payoffs)) {
  if (players_.empty()) throw Error(ErrorKind::parameter, "a game needs at least one player");
  if (strategies_.size() != players_.size())
    throw Error(ErrorKind::parameter, "strategy lists must match the player count");
  num_cells_ = 1;
  for (const auto& s : strategies_) {
    if (s.empty()) throw Error(ErrorKind::parameter, "every player needs at least one strategy");
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s[a].empty() || s[a].find(',') != std::string::npos)
        throw Error(ErrorKind::parameter, "strategy labels must be nonempty and free of commas");
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (s[a] == s[b]) throw Error(ErrorKind::parameter, "duplicate strategy label " + s[a]);
    }
    counts_.push_back(s.size());
    num_cells_ *= s.size();
  }
  strides_.assign(players_.size(), 1);
  for (std::size_t i = players_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * counts_[i];
  if (payoffs_.size() != num_cells_ * players_.size())
    throw Error(ErrorKind::parameter, "payoff tensor has " + std::to_string(payoffs_.size()) + " entries, expected " +
                                          std::to_string(num_cells_ * players_.size()));
}

NormalFormGame NormalFormGame::bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                                        const std::vector<std::vector<std::pair<Rational, Rational>>>& cells,
                                        std::vector<std::string> players) {
  std::vector<Rational> flat;
  if (cells.size() != row_labels.size()) throw Error(ErrorKind::parameter, "row count mismatch");
  for (const auto& row : cells) {
    if (row.size() != col_labels.size()) throw Error(ErrorKind::parameter, "column count mismatch");
    for (const auto& [a, b] : row) {
      flat.push_back(a);
      flat.push_back(b);
    }
  }
  return NormalFormGame(std::move(players), {std::move(row_labels), std::move(col_labels)}, std::move(flat));
}

std::optional<std::size_t> NormalFormGame::find_strategy(std::size_t player, const std::string& label) const {
  const auto& s = strategies_.at(player);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == label) return k;
  return std::nullopt;
}

std::size_t NormalFormGame::cell_index(const PureProfile& profile) const {
  std::size_t cell = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) cell += profile[i] * strides_[i];
  return cell;
}

PureProfile NormalFormGame::profile_at(std::size_t cell) const {
  PureProfile p(players_.size());
  for (std::size_t i = 0; i < players_.size(); ++i) {
    p[i] = cell / strides_[i];
    cell %= strides_[i];
  }
  return p;
}

std::size_t NormalFormGame::with_strategy(std::size_t cell, std::size_t player, std::size_t s) const {
  std::size_t current = (cell / strides_[player]) % counts_[player];
  return cell - current * strides_[player] + s * strides_[player];
}

void NormalFormGame::validate(const PureProfile& profile) const {
  if (profile.size() != players_.size())
    throw Error(ErrorKind::invalid_profile, "profile has " + std::to_string(profile.size()) + " entries for " +
                                                std::to_string(players_.size()) + " players");
  for (std::size_t i = 0; i < profile.size(); ++i)
    if (profile[i] >= counts_[i])
      throw Error(ErrorKind::invalid_profile, "strategy index " + std::to_string(profile[i]) +
                                                  " out of range for player " + players_[i]);
}

void NormalFormGame::validate(const MixedProfile& profile) const {
  if (profile.probabilities.size() != players_.size())
    throw Error(ErrorKind::invalid_profile, "mixed profile has the wrong number of players");
  for (std::size_t i = 0; i < players_.size(); ++i) {
    const auto& p = profile.probabilities[i];
    if (p.size() != counts_[i])
      throw Error(ErrorKind::invalid_profile, "mixture for player " + players_[i] + " has the wrong length");
    Rational total = 0;
    for (const auto& q : p) {
      if (q < 0) throw Error(ErrorKind::invalid_distribution, "negative probability for player " + players_[i]);
      total += q;
    }
    if (total != 1)
      throw Error(ErrorKind::invalid_distribution,
                  "probabilities for player " + players_[i] + " sum to " + to_string(total));
  }
}

std::string NormalFormGame::profile_label(const PureProfile& profile) const {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += strategies_[i][profile[i]];
  }
  return out;
}

PureProfile NormalFormGame::parse_profile(const std::string& text) const {
  PureProfile p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t player = p.size();
    if (player >= players_.size()) throw Error(ErrorKind::invalid_profile, "too many strategies in '" + text + "'");
    auto idx = find_strategy(player, item);
    if (!idx) throw Error(ErrorKind::invalid_profile, "unknown strategy '" + item + "' for player " + players_[player]);
    p.push_back(*idx);
  }
  validate(p);
  return p;
}

bool NormalFormGame::operator==(const NormalFormGame& other) const {
  return players_ == other.players_ && strategies_ == other.strategies_ && payoffs_ == other.payoffs_;
}

ValueVector payoff(const NormalFormGame& game, const PureProfile& profile) {
  game.validate(profile);
  std::size_t cell = game.cell_index(profile);
  ValueVector v;
  for (std::size_t i = 0; i < game.num_players(); ++i) v.push_back(game.at(cell, i));
  return v;
}

ValueVector expected_payoff(const NormalFormGame& game, const MixedProfile& profile) {
  game.validate(profile);
  const std::size_t n = game.num_players();
  ValueVector result(n, Rational(0));
  // Only cells in the product of supports carry weight.
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < game.num_strategies(i); ++s)
      if (profile.probabilities[i][s] != 0) support[i].push_back(s);

  std::vector<std::size_t> pos(n, 0);
  PureProfile cell(n);
  while (true) {
    Rational weight = 1;
    for (std::size_t i = 0; i < n; ++i) {
      cell[i] = support[i][pos[i]];
      weight *= profile.probabilities[i][cell[i]];
    }
    std::size_t idx = game.cell_index(cell);
    for (std::size_t i = 0; i < n; ++i) result[i] += weight * game.at(idx, i);

    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < support[k].size()) break;
      pos[k] = 0;
      if (k == 0) return result;
    }
  }
}

NormalFormGame affine_transform(const NormalFormGame& game, std::size_t player, const Rational& alpha,
                                const Rational& beta) {
  if (alpha <= 0) throw Error(ErrorKind::invalid_scale, "alpha must be positive, got " + to_string(alpha));
  if (player >= game.num_players()) throw Error(ErrorKind::parameter, "no such player");
  std::vector<Rational> payoffs = game.payoff_tensor();
  const std::size_t n = game.num_players();
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Rational& u = payoffs[c * n + player];
    u = alpha * u + beta;
  }
  return NormalFormGame(game.players(), game.strategies(), std::move(payoffs));
}

std::optional<Rational> constant_sum(const NormalFormGame& game) {
  std::optional<Rational> constant;
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Rational sum = 0;
    for (std::size_t i = 0; i < game.num_players(); ++i) sum += game.at(c, i);
    if (!constant)
      constant = sum;
    else if (*constant != sum)
      return std::nullopt;
  }
  return constant;
}

NormalFormGame fictitious_extension(const NormalFormGame& game, const Rational& constant) {
  auto players = game.players();
  std::string name = "fictitious";
  while (std::find(players.begin(), players.end(), name) != players.end()) name += "'";
  players.push_back(name);
  auto strategies = game.strategies();
  strategies.push_back({"*"});

  const std::size_t n = game.num_players();
  std::vector<Rational> payoffs;
  payoffs.reserve(game.num_cells() * (n + 1));
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      payoffs.push_back(game.at(c, i));
      sum += game.at(c, i);
    }
    payoffs.push_back(constant - sum);
  }
  return NormalFormGame(std::move(players), std::move(strategies), std::move(payoffs));
}

}  // namespace optimin
