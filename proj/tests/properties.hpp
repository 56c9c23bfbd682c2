#pragma once

// Randomized property suites. Each runs a fixed number of instances from a
// fixed seed and reports how many instances violated the property.

#include <sstream>
#include <string>

#include "optimin/coop.hpp"
#include "optimin/matching.hpp"
#include "optimin/noncoop.hpp"
#include "optimin/pareto.hpp"
#include "optimin/zerosum.hpp"
#include "support.hpp"

namespace properties {

using namespace optimin;
using support::q;

struct Outcome {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline constexpr int kInstances = 1000;

inline std::vector<PureProfile> optimin_profiles(const NormalFormGame& g,
                                                 DeviationRule rule = DeviationRule::better_response) {
  std::vector<PureProfile> out;
  for (const auto& e : optimin_pure(g, rule)) out.push_back(e.profile);
  return out;
}

inline bool contains(const std::vector<PureProfile>& set, const PureProfile& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

inline Outcome value_below_payoff() {
  Outcome o{"value never exceeds payoff"};
  support::Rng rng(1001);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_small_game(rng);
    for (const auto& e : value_table(g))
      for (std::size_t i = 0; i < g.num_players(); ++i)
        if (e.value[i] > g.at(e.profile, i)) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome nash_value_is_payoff() {
  Outcome o{"Nash value equals payoff"};
  support::Rng rng(1002);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_small_game(rng);
    for (const auto& p : nash_pure(g))
      if (value_pure(g, p).value != payoff(g, p)) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome affine_invariance() {
  Outcome o{"optimin set invariant under positive affine maps"};
  support::Rng rng(1003);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_small_game(rng);
    auto h = g;
    for (std::size_t i = 0; i < g.num_players(); ++i)
      h = affine_transform(h, i, q(rng.uniform(1, 9), rng.uniform(1, 4)), q(rng.uniform(-20, 20), rng.uniform(1, 3)));
    if (optimin_profiles(g) != optimin_profiles(h)) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome constant_sum_nash() {
  Outcome o{"Nash points are optimin in constant-sum games"};
  support::Rng rng(1004);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_constant_sum(rng, rng.uniform(2, 3), rng.uniform(-5, 5));
    auto opt = optimin_profiles(g);
    for (const auto& p : nash_pure(g))
      if (!contains(opt, p)) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome fictitious_nash() {
  Outcome o{"Nash points are optimin in the fictitious extension"};
  support::Rng rng(1005);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_small_game(rng);
    auto ext = fictitious_extension(g, q(rng.uniform(-10, 10)));
    auto opt = optimin_profiles(ext);
    for (auto p : nash_pure(g)) {
      p.push_back(0);
      if (!contains(opt, p)) o.fail("instance " + std::to_string(o.instances));
    }
  }
  return o;
}

inline Outcome maximin_reduction() {
  Outcome o{"unrestricted deviations give the maximin profiles"};
  support::Rng rng(1006);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_small_game(rng);
    auto m = maximin_profile(g);
    std::vector<PureProfile> product;
    for (const auto& p : support::all_profiles(g)) {
      bool all = true;
      for (std::size_t i = 0; i < g.num_players(); ++i)
        all = all && std::find(m.strategies[i].begin(), m.strategies[i].end(), p[i]) != m.strategies[i].end();
      if (all) product.push_back(p);
    }
    if (optimin_profiles(g, DeviationRule::unrestricted) != product) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline std::vector<coop::Allocation> integer_imputations(const coop::TUGame& g) {
  std::vector<coop::Allocation> out;
  Rational total = g.worth(7);
  for (Rational b = g.worth(2); b <= total; b += 1)
    for (Rational c = g.worth(4); b + c <= total; c += 1) {
      Rational a = total - b - c;
      if (a >= g.worth(1)) out.push_back({a, b, c});
    }
  return out;
}

inline Outcome convex_core_is_grid_optimin() {
  Outcome o{"grid optimin equals the core on convex games"};
  support::Rng rng(1007);
  for (; o.instances < kInstances; ++o.instances) {
    auto g = support::random_convex(rng, 3);
    std::vector<coop::Allocation> expected;
    for (const auto& x : integer_imputations(g))
      if (support::brute_in_core(g, x)) expected.push_back(x);
    std::vector<coop::Allocation> got;
    for (const auto& p : coop::optimin_coop(g, q(1)).points) got.push_back(p.x);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected || expected.empty()) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome nucleolus_is_optimin() {
  Outcome o{"nucleolus is optimin when the core is nonempty"};
  support::Rng rng(1008);
  while (o.instances < kInstances) {
    auto g = support::random_tu(rng, 3, 0, 12);
    if (coop::core(g).empty) continue;
    ++o.instances;
    auto nu = coop::nucleolus(g);
    auto v = coop::coop_value(g, nu);
    bool ok = support::brute_in_core(g, nu) && v == nu;
    for (const auto& y : integer_imputations(g))
      if (dominates(coop::coop_value(g, y), v)) ok = false;
    if (!ok) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome stable_matchings_are_optimin() {
  Outcome o{"stable matchings are optimin"};
  support::Rng rng(1009);
  for (; o.instances < kInstances; ++o.instances) {
    auto p = support::random_marriage(rng, rng.uniform(1, 4));
    auto opt = matching::optimin_matchings(p);
    for (const auto& m : matching::all_matchings(p))
      if (support::brute_stable(p, m) && std::find(opt.begin(), opt.end(), m) == opt.end())
        o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline Outcome maximin_pair_dominates() {
  Outcome o{"maximin pair value dominates grid values in zero-sum games"};
  support::Rng rng(1010);
  for (; o.instances < kInstances; ++o.instances) {
    auto base = support::random_game(rng, {std::size_t(rng.uniform(1, 3)), std::size_t(rng.uniform(1, 3))});
    std::vector<Rational> pay = base.payoff_tensor();
    for (std::size_t c = 0; c < base.num_cells(); ++c) pay[2 * c + 1] = -pay[2 * c];
    StatisticalGame sg(NormalFormGame(base.players(), base.strategies(), pay));
    const auto& g = sg.game();
    auto s0 = maximin_lp(sg, 0), s1 = maximin_lp(sg, 1);
    auto top = value_mixed_2p(g, MixedProfile{{s0.mixture, s1.mixture}}).value;
    bool ok = top == ValueVector{s0.value, s1.value};
    for (const auto& r : simplex_grid(g.num_strategies(0), 2))
      for (const auto& c : simplex_grid(g.num_strategies(1), 2)) {
        auto v = value_mixed_2p(g, MixedProfile{{r, c}}).value;
        if (v[0] > top[0] || v[1] > top[1]) ok = false;
      }
    if (!ok) o.fail("instance " + std::to_string(o.instances));
  }
  return o;
}

inline std::vector<Outcome (*)()> all() {
  return {value_below_payoff,          nash_value_is_payoff, affine_invariance,          constant_sum_nash,
          fictitious_nash,             maximin_reduction,    convex_core_is_grid_optimin, nucleolus_is_optimin,
          stable_matchings_are_optimin, maximin_pair_dominates};
}

}  // namespace properties
