#pragma once

// Shared helpers for the test binaries: random instance builders and
// brute-force reference implementations that do not call the library's solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "optimin/coop.hpp"
#include "optimin/game.hpp"
#include "optimin/lp.hpp"
#include "optimin/matching.hpp"

namespace support {

using optimin::NormalFormGame;
using optimin::PureProfile;
using optimin::Rational;
using optimin::ValueVector;

inline Rational q(long a, long b = 1) { return optimin::make_rational(a, b); }

inline std::vector<Rational> qs(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(q(x));
  return out;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  bool coin() { return uniform(0, 1) == 1; }
};

inline NormalFormGame random_game(Rng& rng, std::vector<std::size_t> counts, long lo = -5, long hi = 5) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    players.push_back("p" + std::to_string(i + 1));
    strategies.emplace_back();
    for (std::size_t s = 0; s < counts[i]; ++s) strategies.back().push_back("s" + std::to_string(s));
    cells *= counts[i];
  }
  std::vector<Rational> payoffs;
  for (std::size_t c = 0; c < cells * counts.size(); ++c) payoffs.push_back(q(rng.uniform(lo, hi)));
  return NormalFormGame(players, strategies, payoffs);
}

inline NormalFormGame random_small_game(Rng& rng) {
  std::size_t n = rng.uniform(2, 3);
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i) counts.push_back(rng.uniform(1, n == 2 ? 4 : 3));
  return random_game(rng, counts);
}

/// Two-player game whose payoffs sum to `total` in every cell.
inline NormalFormGame random_constant_sum(Rng& rng, std::size_t n, long total) {
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i) counts.push_back(rng.uniform(1, 3));
  NormalFormGame g = random_game(rng, counts);
  std::vector<Rational> payoffs = g.payoff_tensor();
  for (std::size_t c = 0; c < g.num_cells(); ++c) {
    Rational rest = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) rest += payoffs[c * n + i];
    payoffs[c * n + n - 1] = total - rest;
  }
  return NormalFormGame(g.players(), g.strategies(), payoffs);
}

/// All pure profiles in lexicographic order.
inline std::vector<PureProfile> all_profiles(const NormalFormGame& g) {
  std::vector<PureProfile> out;
  PureProfile p(g.num_players(), 0);
  while (true) {
    out.push_back(p);
    std::size_t k = p.size();
    while (k > 0) {
      --k;
      if (++p[k] < g.num_strategies(k)) break;
      p[k] = 0;
      if (k == 0) return out;
    }
    if (p.empty()) return out;
  }
}

/// Direct reading of the value definition: player i's minimum payoff over all
/// profiles that keep i's strategy and in which every other player either
/// keeps its strategy or plays a strict better response.
inline ValueVector brute_value(const NormalFormGame& g, const PureProfile& p) {
  const std::size_t n = g.num_players();
  ValueVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> worst;
    for (const auto& r : all_profiles(g)) {
      if (r[i] != p[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (j == i || r[j] == p[j]) continue;
        PureProfile alt = p;
        alt[j] = r[j];
        ok = g.at(alt, j) > g.at(p, j);
      }
      if (ok && (!worst || g.at(r, i) < *worst)) worst = g.at(r, i);
    }
    v[i] = *worst;
  }
  return v;
}

inline bool weakly_better_somewhere(const ValueVector& a, const ValueVector& b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

/// Indices whose vector no other vector dominates (quadratic reference filter).
inline std::vector<std::size_t> brute_pareto(const std::vector<ValueVector>& values) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < values.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < values.size() && !dominated; ++b) dominated = weakly_better_somewhere(values[b], values[a]);
    if (!dominated) out.push_back(a);
  }
  return out;
}

inline std::vector<PureProfile> brute_optimin(const NormalFormGame& g) {
  auto profiles = all_profiles(g);
  std::vector<ValueVector> values;
  for (const auto& p : profiles) values.push_back(brute_value(g, p));
  std::vector<PureProfile> out;
  for (std::size_t k : brute_pareto(values)) out.push_back(profiles[k]);
  return out;
}

inline std::vector<PureProfile> brute_nash(const NormalFormGame& g) {
  std::vector<PureProfile> out;
  for (const auto& p : all_profiles(g)) {
    bool stable = true;
    for (std::size_t i = 0; i < g.num_players() && stable; ++i) {
      PureProfile alt = p;
      for (std::size_t s = 0; s < g.num_strategies(i) && stable; ++s) {
        alt[i] = s;
        stable = g.at(alt, i) <= g.at(p, i);
      }
    }
    if (stable) out.push_back(p);
  }
  return out;
}

// ---- linear programming -----------------------------------------------------

/// Solves A x = b exactly; nullopt unless the solution is unique.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct BruteLp {
  bool feasible = false;
  Rational objective;
};

/// Vertex enumeration for a program whose variables all have finite bounds.
inline BruteLp brute_lp(const optimin::lp::LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints()) {
    rows.push_back(c.coefficients);
    rhs.push_back(c.rhs);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> e(n, Rational(0));
    e[v] = 1;
    rows.push_back(e);
    rhs.push_back(*lp.bounds()[v].lower);
    rows.push_back(e);
    rhs.push_back(*lp.bounds()[v].upper);
  }
  BruteLp best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t k : pick) {
        a.push_back(rows[k]);
        b.push_back(rhs[k]);
      }
      auto x = solve_square(a, b);
      if (!x || !lp.is_feasible(*x)) return;
      Rational val = lp.evaluate(*x);
      bool better = lp.sense() == optimin::lp::Sense::minimize ? val < best.objective : val > best.objective;
      if (!best.feasible || better) {
        best.feasible = true;
        best.objective = val;
      }
      return;
    }
    for (std::size_t k = start; k < rows.size(); ++k) {
      pick[depth] = k;
      choose(k + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

// ---- cooperative games --------------------------------------------------------

inline optimin::coop::TUGame random_tu(Rng& rng, std::size_t n, long lo = 0, long hi = 30) {
  std::vector<Rational> w(std::size_t{1} << n);
  for (std::size_t s = 1; s < w.size(); ++s) w[s] = q(rng.uniform(lo, hi));
  return optimin::coop::TUGame(n, w);
}

/// Supermodular game: u(S) = sum of member weights + sum over pairs inside S of
/// nonnegative synergies + a nonnegative term growing with |S|^2.
inline optimin::coop::TUGame random_convex(Rng& rng, std::size_t n) {
  std::vector<long> weight(n);
  for (auto& w : weight) w = rng.uniform(0, 10);
  std::vector<std::vector<long>> syn(n, std::vector<long>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) syn[a][b] = rng.uniform(0, 6);
  long curve = rng.uniform(0, 3);
  std::vector<Rational> w(std::size_t{1} << n);
  for (std::size_t s = 1; s < w.size(); ++s) {
    long total = 0, size = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(s >> a & 1)) continue;
      ++size;
      total += weight[a];
      for (std::size_t b = a + 1; b < n; ++b)
        if (s >> b & 1) total += syn[a][b];
    }
    w[s] = q(total + curve * size * size);
  }
  return optimin::coop::TUGame(n, w);
}

inline bool brute_in_core(const optimin::coop::TUGame& g, const std::vector<Rational>& x) {
  for (std::size_t s = 1; s <= g.grand(); ++s) {
    Rational sum = 0;
    for (std::size_t i = 0; i < g.num_players(); ++i)
      if (s >> i & 1) sum += x[i];
    if (s == g.grand() ? sum != g.worth(s) : sum < g.worth(s)) return false;
  }
  return true;
}

/// Average marginal contribution over all n! orders.
inline std::vector<Rational> brute_shapley(const optimin::coop::TUGame& g) {
  const std::size_t n = g.num_players();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> phi(n, Rational(0));
  long count = 0;
  do {
    optimin::coop::Coalition s = 0;
    for (std::size_t i : order) {
      phi[i] += g.worth(s | (1u << i)) - g.worth(s);
      s |= 1u << i;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& p : phi) p /= count;
  return phi;
}

// ---- matching -------------------------------------------------------------------

inline optimin::matching::MarriageProblem random_marriage(Rng& rng, std::size_t n) {
  std::vector<std::string> a, b;
  for (std::size_t k = 0; k < n; ++k) {
    a.push_back("a" + std::to_string(k + 1));
    b.push_back("b" + std::to_string(k + 1));
  }
  std::vector<std::vector<std::size_t>> rankings;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::vector<std::size_t> list;
    std::size_t other = i < n ? n : 0;
    for (std::size_t j = other; j < other + n; ++j) list.push_back(j);
    list.push_back(i);
    std::shuffle(list.begin(), list.end(), rng.engine);
    rankings.push_back(list);
  }
  return optimin::matching::MarriageProblem(a, b, rankings);
}

inline bool brute_stable(const optimin::matching::MarriageProblem& p, const optimin::matching::Matching& m) {
  const std::size_t pop = p.population();
  for (std::size_t i = 0; i < pop; ++i)
    if (p.rank(i, i) < p.rank(i, m.partner[i])) return false;
  for (std::size_t a = 0; a < p.side_size(); ++a)
    for (std::size_t b = p.side_size(); b < pop; ++b)
      if (m.partner[a] != b && p.rank(a, b) < p.rank(a, m.partner[a]) && p.rank(b, a) < p.rank(b, m.partner[b]))
        return false;
  return true;
}

/// Worst outcome per individual, enumerating every group and every internal
/// re-matching of it directly (no pruning).
inline std::vector<std::size_t> brute_matching_value(const optimin::matching::MarriageProblem& p,
                                                     const optimin::matching::Matching& m) {
  const std::size_t pop = p.population();
  std::vector<std::size_t> worst = m.partner;
  auto update = [&](std::size_t i, std::size_t outcome) {
    if (p.rank(i, outcome) > p.rank(i, worst[i])) worst[i] = outcome;
  };
  for (std::size_t mask = 1; mask < (std::size_t{1} << pop); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pop; ++i)
      if (mask >> i & 1) members.push_back(i);
    std::vector<std::size_t> assign(pop, pop);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == members.size()) {
        for (std::size_t i : members)
          if (p.rank(i, assign[i]) >= p.rank(i, m.partner[i])) return;
        for (std::size_t i = 0; i < pop; ++i) {
          if (mask >> i & 1) continue;
          std::size_t partner = m.partner[i];
          update(i, partner != i && (mask >> partner & 1) ? i : partner);
        }
        return;
      }
      std::size_t i = members[k];
      if (assign[i] != pop) {
        rec(k + 1);
        return;
      }
      assign[i] = i;
      rec(k + 1);
      assign[i] = pop;
      for (std::size_t j : members) {
        if (assign[j] != pop || (j < p.side_size()) == (i < p.side_size())) continue;
        assign[i] = j;
        assign[j] = i;
        rec(k + 1);
        assign[i] = pop;
        assign[j] = pop;
      }
    };
    rec(0);
  }
  return worst;
}

}  // namespace support
