#include "optimin/coop.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "optimin/error.hpp"
#include "optimin/parallel.hpp"
#include "optimin/pareto.hpp"

namespace optimin::coop {

std::string coalition_label(Coalition s) {
  std::string out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (s & (1u << i)) {
      if (!out.empty()) out += ",";
      out += std::to_string(i + 1);
    }
  }
  return out;
}

Coalition parse_coalition(const std::string& label, std::size_t n) {
  Coalition s = 0;
  std::stringstream ss(label);
  std::string item;
  long previous = 0;
  while (std::getline(ss, item, ',')) {
    long p = 0;
    try {
      std::size_t used = 0;
      p = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad coalition key '" + label + "'");
    }
    if (p < 1 || static_cast<std::size_t>(p) > n)
      throw Error(ErrorKind::parse, "player " + item + " out of range in coalition '" + label + "'");
    if (p <= previous) throw Error(ErrorKind::parse, "coalition key '" + label + "' is not sorted ascending");
    previous = p;
    s |= 1u << (p - 1);
  }
  if (s == 0) throw Error(ErrorKind::parse, "empty coalition key");
  return s;
}

TUGame::TUGame(std::size_t n, std::vector<Rational> worth) : n_(n), worth_(std::move(worth)) {
  if (n == 0 || n > max_players) throw Error(ErrorKind::parameter, "player count must be in 1.." + std::to_string(max_players));
  if (worth_.size() != (std::size_t{1} << n))
    throw Error(ErrorKind::parameter, "worth table must have 2^n entries");
  if (worth_[0] != 0) throw Error(ErrorKind::parameter, "the empty coalition must have worth 0");

  // best[S] = max over partitions of S of the summed worth.
  std::vector<Rational> best(worth_.size());
  for (Coalition s = 1; s < worth_.size(); ++s) {
    best[s] = worth_[s];
    Coalition low = s & (~s + 1);
    Coalition rest = s ^ low;
    // Blocks containing the lowest member; the remainder is partitioned recursively.
    for (Coalition sub = rest;; sub = (sub - 1) & rest) {
      Coalition block = sub | low;
      if (block != s) {
        Rational candidate = worth_[block] + best[s ^ block];
        if (candidate > best[s]) best[s] = candidate;
      }
      if (sub == 0) break;
    }
  }
  cohesive_ = best[grand()] == worth_[grand()];
}

std::vector<Rational> coalition_sums(const Allocation& x) {
  std::vector<Rational> sums(std::size_t{1} << x.size(), Rational(0));
  for (Coalition s = 1; s < sums.size(); ++s) {
    Coalition low = s & (~s + 1);
    sums[s] = sums[s ^ low] + x[static_cast<std::size_t>(std::countr_zero(low))];
  }
  return sums;
}

namespace {

void check_length(const TUGame& game, const Allocation& x) {
  if (x.size() != game.num_players()) throw Error(ErrorKind::parameter, "allocation length mismatch");
}

void require_feasible(const TUGame& game, const Allocation& x) {
  check_length(game, x);
  if (!is_feasible(game, x)) throw Error(ErrorKind::domain, "allocation exceeds u(N)");
}

}  // namespace

bool is_feasible(const TUGame& game, const Allocation& x) {
  check_length(game, x);
  Rational total = 0;
  for (const auto& v : x) total += v;
  return total <= game.worth(game.grand());
}

bool is_imputation(const TUGame& game, const Allocation& x) {
  check_length(game, x);
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < game.worth(Coalition{1} << i)) return false;
    total += x[i];
  }
  return total == game.worth(game.grand());
}

std::vector<Coalition> dominating_coalitions(const TUGame& game, const Allocation& x, std::size_t player) {
  require_feasible(game, x);
  if (player >= game.num_players()) throw Error(ErrorKind::parameter, "no such player");
  auto sums = coalition_sums(x);
  std::vector<Coalition> out;
  Coalition others = game.grand() & ~(Coalition{1} << player);
  for (Coalition s = 1; s <= game.grand(); ++s)
    if ((s & ~others) == 0 && sums[s] < game.worth(s)) out.push_back(s);
  return out;
}

ValueVector coop_value(const TUGame& game, const Allocation& x) {
  require_feasible(game, x);
  const std::size_t n = game.num_players();
  auto sums = coalition_sums(x);
  ValueVector value = x;
  for (Coalition s = 1; s < game.grand(); ++s) {
    if (sums[s] >= game.worth(s)) continue;
    Coalition rest = game.grand() ^ s;
    Rational loss = (sums[rest] - game.worth(rest)) / Rational(std::popcount(rest));
    for (std::size_t i = 0; i < n; ++i) {
      if (!(rest & (Coalition{1} << i))) continue;
      Rational candidate = x[i] - loss;
      if (candidate < value[i]) value[i] = candidate;
    }
  }
  return value;
}

ValueVector residual_payoffs(const TUGame& game, const Allocation& x, Coalition deviating) {
  check_length(game, x);
  Coalition rest = game.grand() ^ deviating;
  auto sums = coalition_sums(x);
  Rational loss = rest ? (sums[rest] - game.worth(rest)) / Rational(std::popcount(rest)) : Rational(0);
  ValueVector out;
  for (std::size_t i = 0; i < game.num_players(); ++i)
    if (rest & (Coalition{1} << i)) out.push_back(x[i] - loss);
  return out;
}

bool LinearSet::contains(const Allocation& x) const {
  for (const auto& c : constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients.at(j) * x[j];
    bool ok = c.relation == lp::Relation::less_equal ? lhs <= c.rhs
              : c.relation == lp::Relation::equal     ? lhs == c.rhs
                                                      : lhs >= c.rhs;
    if (!ok) return false;
  }
  return true;
}

std::vector<Allocation> CoopGridOptimin::outside(const LinearSet& candidate) const {
  std::vector<Allocation> out;
  for (const auto& p : points)
    if (!candidate.contains(p.x)) out.push_back(p.x);
  return out;
}

namespace {

Rational ceil_to_step(const Rational& value, const Rational& step) {
  Rational q = value / step;
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(k) * step;
}

}  // namespace

CoopGridOptimin optimin_coop(const TUGame& game, const Rational& step, const Rational& widen, unsigned threads) {
  if (step <= 0) throw Error(ErrorKind::parameter, "grid step must be positive");
  if (widen < 0) throw Error(ErrorKind::parameter, "widening must be nonnegative");
  const std::size_t n = game.num_players();
  const Rational total = game.worth(game.grand());
  std::vector<Rational> lower(n);
  Rational lower_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lower[i] = game.worth(Coalition{1} << i) - widen;
    lower_sum += lower[i];
  }

  CoopGridOptimin result;
  result.step = step;
  if (lower_sum > total) {
    result.imputations_empty = true;
    return result;
  }

  std::vector<Allocation> lattice;
  Allocation x(n);
  // Players 2..n range over step multiples; player 1 takes the remainder.
  auto recurse = [&](auto&& self, std::size_t i, const Rational& used) -> void {
    if (i == n) {
      x[0] = total - used;
      if (x[0] >= lower[0]) lattice.push_back(x);
      return;
    }
    Rational budget = total - lower[0] - used;
    for (Rational v = ceil_to_step(lower[i], step); v <= budget; v += step) {
      x[i] = v;
      self(self, i + 1, used + v);
    }
  };
  if (n == 1) {
    lattice.push_back({total});
  } else {
    recurse(recurse, 1, Rational(0));
  }
  result.lattice_size = lattice.size();
  if (lattice.empty()) return result;

  std::vector<GridPoint> evaluated(lattice.size());
  parallel_for(lattice.size(), threads,
               [&](std::size_t k) { evaluated[k] = GridPoint{lattice[k], coop_value(game, lattice[k])}; });
  result.points = pareto_filter(evaluated, [](const GridPoint& p) { return p.value; });
  return result;
}

namespace {

std::vector<Rational> indicator(Coalition s, std::size_t n, std::size_t width) {
  std::vector<Rational> row(width, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    if (s & (Coalition{1} << i)) row[i] = 1;
  return row;
}

lp::LinearProgram core_program(const TUGame& game) {
  const std::size_t n = game.num_players();
  lp::LinearProgram program(n);
  for (std::size_t i = 0; i < n; ++i) program.set_free(i);
  program.add_constraint(indicator(game.grand(), n, n), lp::Relation::equal, game.worth(game.grand()));
  for (Coalition s = 1; s < game.grand(); ++s)
    program.add_constraint(indicator(s, n, n), lp::Relation::greater_equal, game.worth(s));
  return program;
}

}  // namespace

CoreResult core(const TUGame& game) {
  CoreResult result{true, {}, core_program(game)};
  lp::Solution sol = lp::solve_lp(result.program);
  if (sol.status == lp::Status::optimal) {
    result.empty = false;
    result.witness = sol.point;
  }
  return result;
}

std::optional<std::vector<std::pair<Rational, Rational>>> core_bounds(const TUGame& game) {
  const std::size_t n = game.num_players();
  std::vector<std::pair<Rational, Rational>> bounds(n);
  for (std::size_t i = 0; i < n; ++i) {
    lp::LinearProgram program = core_program(game);
    std::vector<Rational> objective(n, Rational(0));
    objective[i] = 1;
    program.set_objective(lp::Sense::minimize, objective);
    lp::Solution low = lp::solve_lp(program);
    if (low.status != lp::Status::optimal) return std::nullopt;
    program.set_objective(lp::Sense::maximize, objective);
    lp::Solution high = lp::solve_lp(program);
    bounds[i] = {low.objective, high.objective};
  }
  return bounds;
}

bool in_core(const TUGame& game, const Allocation& x) {
  check_length(game, x);
  auto sums = coalition_sums(x);
  if (sums[game.grand()] != game.worth(game.grand())) return false;
  for (Coalition s = 1; s < game.grand(); ++s)
    if (sums[s] < game.worth(s)) return false;
  return true;
}

Allocation shapley(const TUGame& game) {
  const std::size_t n = game.num_players();
  if (n > 12) throw Error(ErrorKind::resource, "Shapley value limited to 12 players");
  // |S|!(n-|S|-1)!/n! summed over S not containing i.
  std::vector<Rational> weight(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class num = 1, den = 1;
    for (std::size_t t = 2; t <= k; ++t) num *= static_cast<unsigned long>(t);
    for (std::size_t t = 2; t <= n - k - 1; ++t) num *= static_cast<unsigned long>(t);
    for (std::size_t t = 2; t <= n; ++t) den *= static_cast<unsigned long>(t);
    weight[k] = Rational(num, den);
    weight[k].canonicalize();
  }
  Allocation phi(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Coalition bit = Coalition{1} << i;
    for (Coalition s = 0; s <= game.grand(); ++s) {
      if (s & bit) continue;
      phi[i] += weight[static_cast<std::size_t>(std::popcount(s))] * (game.worth(s | bit) - game.worth(s));
    }
  }
  return phi;
}

namespace {

std::size_t rank_of(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Allocation nucleolus(const TUGame& game) {
  const std::size_t n = game.num_players();
  if (n > 8) throw Error(ErrorKind::resource, "nucleolus limited to 8 players");
  Rational lower_sum = 0;
  for (std::size_t i = 0; i < n; ++i) lower_sum += game.worth(Coalition{1} << i);
  if (lower_sum > game.worth(game.grand())) throw Error(ErrorKind::domain, "imputation set is empty");
  if (n == 1) return {game.worth(game.grand())};

  // Coalitions whose excess u(S) - x(S) has been pinned, with that excess.
  std::vector<std::pair<Coalition, Rational>> fixed;
  std::vector<bool> is_fixed(game.grand(), false);

  auto base_program = [&](std::size_t width) {
    lp::LinearProgram program(width);
    for (std::size_t i = 0; i < width; ++i) program.set_free(i);
    program.add_constraint(indicator(game.grand(), n, width), lp::Relation::equal, game.worth(game.grand()));
    for (std::size_t i = 0; i < n; ++i)
      program.add_constraint(indicator(Coalition{1} << i, n, width), lp::Relation::greater_equal,
                             game.worth(Coalition{1} << i));
    for (const auto& [s, e] : fixed)
      program.add_constraint(indicator(s, n, width), lp::Relation::equal, game.worth(s) - e);
    return program;
  };

  while (true) {
    std::vector<std::vector<Rational>> rows{indicator(game.grand(), n, n)};
    for (const auto& [s, e] : fixed) rows.push_back(indicator(s, n, n));
    bool pinned = rank_of(rows, n) == n;
    bool any_free = false;
    for (Coalition s = 1; s < game.grand(); ++s) any_free = any_free || !is_fixed[s];
    if (pinned || !any_free) {
      lp::Solution sol = lp::solve_lp(base_program(n));
      if (sol.status != lp::Status::optimal) throw std::logic_error("nucleolus LP lost feasibility");
      return sol.point;
    }

    // min t  s.t.  x(S) + t >= u(S) for every unpinned S.
    lp::LinearProgram program = base_program(n + 1);
    std::vector<Rational> objective(n + 1, Rational(0));
    objective[n] = 1;
    program.set_objective(lp::Sense::minimize, objective);
    for (Coalition s = 1; s < game.grand(); ++s) {
      if (is_fixed[s]) continue;
      auto row = indicator(s, n, n + 1);
      row[n] = 1;
      program.add_constraint(std::move(row), lp::Relation::greater_equal, game.worth(s));
    }
    lp::Solution sol = lp::solve_lp(program);
    if (sol.status != lp::Status::optimal) throw std::logic_error("nucleolus LP not optimal");
    const Rational t = sol.objective;
    auto sums = coalition_sums(Allocation(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(n)));

    // A coalition is pinned at t when no optimal point gives it a lower excess.
    std::vector<Coalition> newly_fixed;
    for (Coalition s = 1; s < game.grand(); ++s) {
      if (is_fixed[s] || game.worth(s) - sums[s] != t) continue;
      lp::LinearProgram probe = base_program(n);
      for (Coalition r = 1; r < game.grand(); ++r)
        if (!is_fixed[r]) probe.add_constraint(indicator(r, n, n), lp::Relation::greater_equal, game.worth(r) - t);
      probe.set_objective(lp::Sense::maximize, indicator(s, n, n));
      lp::Solution best = lp::solve_lp(probe);
      if (best.status == lp::Status::optimal && best.objective == game.worth(s) - t) newly_fixed.push_back(s);
    }
    if (newly_fixed.empty()) throw std::logic_error("nucleolus iteration made no progress");
    for (Coalition s : newly_fixed) {
      fixed.push_back({s, t});
      is_fixed[s] = true;
    }
  }
}

}  // namespace optimin::coop
