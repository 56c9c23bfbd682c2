#include "optimin/noncoop.hpp"

#include <algorithm>

#include "optimin/error.hpp"
#include "optimin/lp.hpp"
#include "optimin/parallel.hpp"
#include "optimin/pareto.hpp"

namespace optimin {

namespace {

std::vector<std::size_t> better_response_indices(const NormalFormGame& game, std::size_t cell, std::size_t player) {
  std::vector<std::size_t> out;
  const Rational& current = game.at(cell, player);
  for (std::size_t s = 0; s < game.num_strategies(player); ++s)
    if (game.at(game.with_strategy(cell, player, s), player) > current) out.push_back(s);
  return out;
}

// Options per player, sorted ascending, so the odometer below visits profiles
// in lexicographic order and the first strict minimum is the smallest witness.
std::vector<std::vector<std::size_t>> options_for(const NormalFormGame& game, const PureProfile& profile,
                                                  std::size_t player, DeviationRule rule,
                                                  const std::vector<std::vector<std::size_t>>& responses) {
  const std::size_t n = game.num_players();
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == player) {
      options[j] = {profile[j]};
    } else if (rule == DeviationRule::unrestricted) {
      options[j].resize(game.num_strategies(j));
      for (std::size_t s = 0; s < options[j].size(); ++s) options[j][s] = s;
    } else {
      options[j] = responses[j];
      options[j].push_back(profile[j]);
      std::sort(options[j].begin(), options[j].end());
    }
  }
  return options;
}

PureEvaluation evaluate_cell(const NormalFormGame& game, std::size_t cell, DeviationRule rule) {
  const std::size_t n = game.num_players();
  PureEvaluation eval;
  eval.profile = game.profile_at(cell);
  std::vector<std::vector<std::size_t>> responses(n);
  if (rule == DeviationRule::better_response)
    for (std::size_t j = 0; j < n; ++j) responses[j] = better_response_indices(game, cell, j);

  eval.value.resize(n);
  eval.witnesses.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto options = options_for(game, eval.profile, i, rule, responses);
    std::vector<std::size_t> pos(n, 0);
    PureProfile current(n);
    bool first = true;
    while (true) {
      for (std::size_t j = 0; j < n; ++j) current[j] = options[j][pos[j]];
      const Rational& u = game.at(current, i);
      if (first || u < eval.value[i]) {
        eval.value[i] = u;
        eval.witnesses[i] = current;
        first = false;
      }
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++pos[k] < options[k].size()) {
          done = false;
          break;
        }
        pos[k] = 0;
      }
      if (done) break;
    }
  }
  return eval;
}

}  // namespace

BetterResponseSet better_responses(const NormalFormGame& game, const PureProfile& profile, std::size_t player) {
  game.validate(profile);
  if (player >= game.num_players()) throw Error(ErrorKind::parameter, "no such player");
  return {player, profile, better_response_indices(game, game.cell_index(profile), player)};
}

DeviationSpace deviation_space(const NormalFormGame& game, const PureProfile& profile, std::size_t player,
                               DeviationRule rule) {
  game.validate(profile);
  std::vector<std::vector<std::size_t>> responses(game.num_players());
  std::size_t cell = game.cell_index(profile);
  if (rule == DeviationRule::better_response)
    for (std::size_t j = 0; j < game.num_players(); ++j) responses[j] = better_response_indices(game, cell, j);
  return {options_for(game, profile, player, rule, responses)};
}

PureEvaluation value_pure(const NormalFormGame& game, const PureProfile& profile, DeviationRule rule) {
  game.validate(profile);
  return evaluate_cell(game, game.cell_index(profile), rule);
}

std::vector<PureEvaluation> value_table(const NormalFormGame& game, DeviationRule rule, unsigned threads) {
  std::vector<PureEvaluation> table(game.num_cells());
  parallel_for(game.num_cells(), threads, [&](std::size_t c) { table[c] = evaluate_cell(game, c, rule); });
  return table;
}

std::vector<PureEvaluation> optimin_pure(const NormalFormGame& game, DeviationRule rule, unsigned threads) {
  return pareto_filter(value_table(game, rule, threads), [](const PureEvaluation& e) { return e.value; });
}

MaximinResult maximin_profile(const NormalFormGame& game) {
  const std::size_t n = game.num_players();
  MaximinResult result;
  result.strategies.resize(n);
  result.security.resize(n);
  result.strategy_security.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& guarantee = result.strategy_security[i];
    guarantee.resize(game.num_strategies(i));
    std::vector<bool> seen(game.num_strategies(i), false);
    for (std::size_t c = 0; c < game.num_cells(); ++c) {
      std::size_t s = game.profile_at(c)[i];
      if (!seen[s] || game.at(c, i) < guarantee[s]) {
        guarantee[s] = game.at(c, i);
        seen[s] = true;
      }
    }
    result.security[i] = *std::max_element(guarantee.begin(), guarantee.end());
    for (std::size_t s = 0; s < guarantee.size(); ++s)
      if (guarantee[s] == result.security[i]) result.strategies[i].push_back(s);
  }
  return result;
}

std::vector<PureProfile> nash_pure(const NormalFormGame& game, unsigned threads) {
  std::vector<char> is_nash(game.num_cells(), 0);
  parallel_for(game.num_cells(), threads, [&](std::size_t c) {
    for (std::size_t j = 0; j < game.num_players(); ++j)
      if (!better_response_indices(game, c, j).empty()) return;
    is_nash[c] = 1;
  });
  std::vector<PureProfile> out;
  for (std::size_t c = 0; c < game.num_cells(); ++c)
    if (is_nash[c]) out.push_back(game.profile_at(c));
  return out;
}

MixedEvaluation value_mixed_2p(const NormalFormGame& game, const MixedProfile& profile) {
  if (game.num_players() != 2)
    throw Error(ErrorKind::unsupported_arity, "mixed values are only supported for two-player games");
  game.validate(profile);

  MixedEvaluation eval;
  eval.profile = profile;
  eval.value.resize(2);
  eval.witnesses.resize(2);
  const ValueVector agreed = expected_payoff(game, profile);

  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    const std::size_t m = game.num_strategies(j);
    // Payoffs of i and j when j plays pure k against i's agreed mixture.
    std::vector<Rational> ui(m, Rational(0)), uj(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t s = 0; s < game.num_strategies(i); ++s) {
        const Rational& w = profile.probabilities[i][s];
        if (w == 0) continue;
        PureProfile cell(2);
        cell[i] = s;
        cell[j] = k;
        std::size_t idx = game.cell_index(cell);
        ui[k] += w * game.at(idx, i);
        uj[k] += w * game.at(idx, j);
      }
    }

    eval.witnesses[i] = profile;
    if (*std::max_element(uj.begin(), uj.end()) <= agreed[j]) {
      // No mixture of j strictly gains, so the agreement itself is the only option.
      eval.value[i] = agreed[i];
      continue;
    }

    // B_j = {q : uj.q > agreed_j} is a nonempty, relatively open slice of the
    // simplex. Its closure is {q : uj.q >= agreed_j}; the agreed mixture p_j
    // lies in that closure, and a linear function's infimum over a nonempty
    // convex set equals its minimum over the set's closure. So the infimum
    // over B_j and {p_j} is the LP minimum of ui.q over the closed slice.
    lp::LinearProgram program(m);
    program.set_objective(lp::Sense::minimize, ui);
    program.add_constraint(std::vector<Rational>(m, Rational(1)), lp::Relation::equal, Rational(1));
    program.add_constraint(uj, lp::Relation::greater_equal, agreed[j]);
    lp::Solution sol = lp::solve_lp(program);
    if (sol.status != lp::Status::optimal) throw std::logic_error("deviation LP unexpectedly not optimal");
    eval.value[i] = sol.objective;
    eval.witnesses[i].probabilities[j] = sol.point;
  }
  return eval;
}

std::vector<std::vector<Rational>> simplex_grid(std::size_t strategies, unsigned resolution) {
  std::vector<std::vector<Rational>> out;
  std::vector<unsigned> counts(strategies, 0);
  // Lexicographically descending compositions of `resolution`.
  auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == strategies) {
      counts[pos] = remaining;
      std::vector<Rational> p(strategies);
      for (std::size_t k = 0; k < strategies; ++k) p[k] = Rational(counts[k], resolution);
      for (auto& q : p) q.canonicalize();
      out.push_back(std::move(p));
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  recurse(recurse, 0, resolution);
  return out;
}

namespace {

// Number of compositions of k into m parts, saturating at `cap`.
std::size_t grid_size(std::size_t m, unsigned k, std::size_t cap) {
  // C(k + m - 1, m - 1)
  long double c = 1;
  for (std::size_t t = 1; t < m; ++t) {
    c = c * static_cast<long double>(k + t) / static_cast<long double>(t);
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

}  // namespace

GridOptimin optimin_grid_2p(const NormalFormGame& game, unsigned resolution, unsigned threads,
                            std::size_t max_profiles) {
  if (game.num_players() != 2)
    throw Error(ErrorKind::unsupported_arity, "mixed-grid search is only supported for two-player games");
  if (resolution < 1) throw Error(ErrorKind::parameter, "grid resolution must be at least 1");
  std::size_t rows = grid_size(game.num_strategies(0), resolution, max_profiles);
  std::size_t cols = grid_size(game.num_strategies(1), resolution, max_profiles);
  if (rows > max_profiles || cols > max_profiles || rows * cols > max_profiles)
    throw Error(ErrorKind::resource, "mixed grid with resolution " + std::to_string(resolution) + " exceeds " +
                                         std::to_string(max_profiles) + " profiles");

  auto grid0 = simplex_grid(game.num_strategies(0), resolution);
  auto grid1 = simplex_grid(game.num_strategies(1), resolution);
  std::vector<MixedEvaluation> evals(grid0.size() * grid1.size());
  parallel_for(evals.size(), threads, [&](std::size_t idx) {
    MixedProfile p{{grid0[idx / grid1.size()], grid1[idx % grid1.size()]}};
    evals[idx] = value_mixed_2p(game, p);
  });

  GridOptimin result;
  result.resolution = resolution;
  result.profiles_evaluated = evals.size();
  result.points = pareto_filter(evals, [](const MixedEvaluation& e) { return e.value; });
  return result;
}

bool is_maximin_equilibrium(const NormalFormGame& game, const PureProfile& profile) {
  game.validate(profile);
  for (const auto& e : optimin_pure(game))
    if (e.profile == profile) return true;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    Rational own = value_pure(game, profile).value[i];
    PureProfile alt = profile;
    for (std::size_t q = 0; q < game.num_strategies(i); ++q) {
      alt[i] = q;
      if (value_pure(game, alt).value[i] > own) return false;
    }
  }
  return true;
}

}  // namespace optimin
