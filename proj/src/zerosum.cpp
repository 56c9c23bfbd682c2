#include "optimin/zerosum.hpp"

#include <stdexcept>

#include "optimin/error.hpp"
#include "optimin/lp.hpp"

namespace optimin {

StatisticalGame::StatisticalGame(NormalFormGame game) : game_(std::move(game)) {
  if (game_.num_players() != 2) throw Error(ErrorKind::domain, "a statistical game has exactly two players");
  for (std::size_t c = 0; c < game_.num_cells(); ++c)
    if (game_.at(c, 0) + game_.at(c, 1) != 0)
      throw Error(ErrorKind::domain, "game is not zero-sum at " + game_.profile_label(game_.profile_at(c)));
}

namespace {

// Payoff to `player` when it plays own strategy s and the opponent plays t.
const Rational& payoff_to(const NormalFormGame& g, std::size_t player, std::size_t s, std::size_t t) {
  PureProfile cell(2);
  cell[player] = s;
  cell[1 - player] = t;
  return g.at(cell, player);
}

}  // namespace

MaximinStrategy maximin_lp(const StatisticalGame& sg, std::size_t player) {
  if (player > 1) throw Error(ErrorKind::parameter, "player must be 0 or 1");
  const NormalFormGame& g = sg.game();
  const std::size_t m = g.num_strategies(player);
  const std::size_t opp = g.num_strategies(1 - player);

  // Variables: mixture x_0..x_{m-1} >= 0, guarantee v free.
  // max v  s.t.  sum_s x_s u(s,t) - v >= 0 for every t,  sum_s x_s = 1.
  lp::LinearProgram program(m + 1);
  program.set_free(m);
  std::vector<Rational> objective(m + 1, Rational(0));
  objective[m] = 1;
  program.set_objective(lp::Sense::maximize, objective);
  for (std::size_t t = 0; t < opp; ++t) {
    std::vector<Rational> row(m + 1);
    for (std::size_t s = 0; s < m; ++s) row[s] = payoff_to(g, player, s, t);
    row[m] = -1;
    program.add_constraint(std::move(row), lp::Relation::greater_equal, Rational(0));
  }
  std::vector<Rational> simplex(m + 1, Rational(1));
  simplex[m] = 0;
  program.add_constraint(std::move(simplex), lp::Relation::equal, Rational(1));

  lp::Solution sol = lp::solve_lp(program);
  if (sol.status != lp::Status::optimal) throw std::logic_error("maximin LP is always feasible and bounded");
  MaximinStrategy out;
  out.player = player;
  out.mixture.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(m));
  out.value = sol.point[m];
  return out;
}

Rational guarantee(const StatisticalGame& sg, std::size_t player, const std::vector<Rational>& mixture) {
  const NormalFormGame& g = sg.game();
  if (mixture.size() != g.num_strategies(player)) throw Error(ErrorKind::invalid_profile, "mixture length mismatch");
  Rational worst;
  for (std::size_t t = 0; t < g.num_strategies(1 - player); ++t) {
    Rational u = 0;
    for (std::size_t s = 0; s < mixture.size(); ++s) u += mixture[s] * payoff_to(g, player, s, t);
    if (t == 0 || u < worst) worst = u;
  }
  return worst;
}

bool optimin_equals_maximin_check(const StatisticalGame& sg, const MixedProfile& profile) {
  sg.game().validate(profile);
  for (std::size_t i = 0; i < 2; ++i)
    if (guarantee(sg, i, profile.probabilities[i]) != maximin_lp(sg, i).value) return false;
  return true;
}

StatisticalGame bulmer_game(unsigned tosses) {
  if (tosses != 1) throw Error(ErrorKind::unsupported, "only the single-toss game is available");
  // Entry = probability of guessing right. With one toss, "say 1/4 if heads"
  // is right w.p. 1/4 when p = 1/4 and w.p. 1/2 when p = 1/2; "say 1/4 if
  // tails" is right w.p. 3/4 and 1/2 respectively.
  auto q = [](long a, long b) { return make_rational(a, b); };
  std::vector<std::vector<std::pair<Rational, Rational>>> cells = {
      {{q(0, 1), q(0, 1)}, {q(1, 1), q(-1, 1)}},
      {{q(1, 1), q(-1, 1)}, {q(0, 1), q(0, 1)}},
      {{q(1, 4), q(-1, 4)}, {q(1, 2), q(-1, 2)}},
      {{q(3, 4), q(-3, 4)}, {q(1, 2), q(-1, 2)}},
  };
  return StatisticalGame(NormalFormGame::bimatrix({"never", "always", "if-heads", "if-tails"}, {"p=1/4", "p=1/2"},
                                                  cells, {"statistician", "nature"}));
}

}  // namespace optimin
