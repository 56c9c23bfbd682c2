#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optimin/game.hpp"
#include "optimin/lp.hpp"

namespace optimin::coop {

/// Coalition as a bitmask; bit i is player i (0-based).
using Coalition = std::uint32_t;
using Allocation = std::vector<Rational>;

/// "1,3" style label with 1-based players.
std::string coalition_label(Coalition s);
Coalition parse_coalition(const std::string& label, std::size_t n);

/// Transferable-utility game. Every nonempty coalition must carry a worth.
class TUGame {
 public:
  static constexpr std::size_t max_players = 20;

  /// `worth` is indexed by coalition mask; entry 0 (the empty coalition) must be zero.
  TUGame(std::size_t n, std::vector<Rational> worth);

  std::size_t num_players() const { return n_; }
  Coalition grand() const { return static_cast<Coalition>((1u << n_) - 1); }
  const Rational& worth(Coalition s) const { return worth_.at(s); }
  const std::vector<Rational>& worths() const { return worth_; }

  /// u(N) >= sum of u over every partition of N. Computed on construction.
  bool cohesive() const { return cohesive_; }

  bool operator==(const TUGame&) const = default;

 private:
  std::size_t n_;
  std::vector<Rational> worth_;
  bool cohesive_ = false;
};

/// x(S) for every mask.
std::vector<Rational> coalition_sums(const Allocation& x);

bool is_feasible(const TUGame& game, const Allocation& x);
bool is_imputation(const TUGame& game, const Allocation& x);

/// Nonempty S excluding `player` with x(S) < u(S). A dominating allocation via
/// S exists exactly when S can pay each member more than x does.
std::vector<Coalition> dominating_coalitions(const TUGame& game, const Allocation& x, std::size_t player);

/// Worst-case payoffs: player i loses an equal share of the shortfall
/// x(N\S) - u(N\S) whenever a coalition S without i can profitably leave.
ValueVector coop_value(const TUGame& game, const Allocation& x);

/// Per-member payoff of the remaining coalition N\S after S leaves.
ValueVector residual_payoffs(const TUGame& game, const Allocation& x, Coalition deviating);

/// A polyhedron {x : a.x rel b}, used to state closed-form answer sets.
struct LinearSet {
  std::vector<lp::Constraint> constraints;
  bool contains(const Allocation& x) const;
};

struct GridPoint {
  Allocation x;
  ValueVector value;
};

struct CoopGridOptimin {
  Rational step;
  bool imputations_empty = false;
  std::size_t lattice_size = 0;
  std::vector<GridPoint> points;  // grid-approximate

  /// Grid members falling outside `candidate`.
  std::vector<Allocation> outside(const LinearSet& candidate) const;
};

/// Pareto filter of coop_value over the imputation lattice: players 2..n take
/// multiples of `step`, player 1 receives the remainder. `widen` lowers every
/// individual-rationality bound by that amount.
CoopGridOptimin optimin_coop(const TUGame& game, const Rational& step, const Rational& widen = Rational(0),
                             unsigned threads = 1);

struct CoreResult {
  bool empty = true;
  Allocation witness;  // set when nonempty
  lp::LinearProgram program;  // x(N) = u(N), x(S) >= u(S)
};

CoreResult core(const TUGame& game);

/// Per-coordinate [min, max] over the core; empty optional for an empty core.
std::optional<std::vector<std::pair<Rational, Rational>>> core_bounds(const TUGame& game);

bool in_core(const TUGame& game, const Allocation& x);

/// Exact average marginal contribution. n <= 12.
Allocation shapley(const TUGame& game);

/// Lexicographic excess minimization over the imputation set by successive LPs. n <= 8.
Allocation nucleolus(const TUGame& game);

}  // namespace optimin::coop
