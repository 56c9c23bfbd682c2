#include "doctest.h"
#include "optimin/error.hpp"
#include "optimin/generators.hpp"
#include "optimin/noncoop.hpp"
#include "optimin/zerosum.hpp"
#include "support.hpp"

using namespace optimin;
using support::q;
using support::qs;

TEST_CASE("single-toss coin guessing game") {
  auto sg = bulmer_game();
  const auto& g = sg.game();
  CHECK(g.num_strategies(0) == 4);
  CHECK(g.num_strategies(1) == 2);
  CHECK(g.at({3, 0}, 0) == q(3, 4));
  CHECK(g.at({3, 1}, 0) == q(1, 2));
  CHECK(g.at({2, 0}, 0) == q(1, 4));

  auto stat = maximin_lp(sg, 0);
  CHECK(stat.value == q(3, 5));
  CHECK(stat.mixture == ValueVector{q(1, 5), q(0), q(0), q(4, 5)});
  auto nature = maximin_lp(sg, 1);
  CHECK(nature.value == q(-3, 5));
  CHECK(nature.mixture == ValueVector{q(2, 5), q(3, 5)});

  // The published pair is optimal: each guarantees the value.
  CHECK(guarantee(sg, 0, {q(1, 5), q(0), q(0), q(4, 5)}) == q(3, 5));
  CHECK(guarantee(sg, 1, {q(2, 5), q(3, 5)}) == q(-3, 5));
  MixedProfile pair{{{q(1, 5), q(0), q(0), q(4, 5)}, {q(2, 5), q(3, 5)}}};
  CHECK(optimin_equals_maximin_check(sg, pair));
  MixedProfile off{{{q(0), q(0), q(0), q(1)}, {q(2, 5), q(3, 5)}}};
  CHECK_FALSE(optimin_equals_maximin_check(sg, off));
  CHECK_THROWS_AS(bulmer_game(2), Error);
}

TEST_CASE("statistical games must be two-player zero-sum") {
  auto bos = std::get<NormalFormGame>(gen::named("battle_of_sexes"));
  CHECK_THROWS_AS(StatisticalGame{bos}, Error);
  auto pennies = std::get<NormalFormGame>(gen::named("matching_pennies"));
  StatisticalGame sg(pennies);
  auto s = maximin_lp(sg, 0);
  CHECK(s.value == 0);
  CHECK(s.mixture == ValueVector{q(1, 2), q(1, 2)});
}

TEST_CASE("LP maximin beats every grid mixture and satisfies the minimax equality") {
  support::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto base = support::random_game(rng, {std::size_t(rng.uniform(1, 3)), std::size_t(rng.uniform(1, 3))});
    std::vector<Rational> pay = base.payoff_tensor();
    for (std::size_t c = 0; c < base.num_cells(); ++c) pay[2 * c + 1] = -pay[2 * c];
    StatisticalGame sg(NormalFormGame(base.players(), base.strategies(), pay));
    auto s0 = maximin_lp(sg, 0), s1 = maximin_lp(sg, 1);
    CHECK(s0.value == -s1.value);
    CHECK(guarantee(sg, 0, s0.mixture) == s0.value);
    CHECK(guarantee(sg, 1, s1.mixture) == s1.value);
    for (const auto& mix : simplex_grid(sg.game().num_strategies(0), 4)) CHECK(guarantee(sg, 0, mix) <= s0.value);
  }
}
