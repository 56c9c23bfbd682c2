#include "doctest.h"
#include "optimin/error.hpp"
#include "optimin/generators.hpp"
#include "optimin/noncoop.hpp"
#include "support.hpp"

using namespace optimin;
using support::q;
using support::qs;

namespace {

NormalFormGame named_game(const std::string& tag) { return std::get<NormalFormGame>(gen::named(tag)); }

std::vector<std::string> labels(const NormalFormGame& g, const std::vector<PureEvaluation>& evals) {
  std::vector<std::string> out;
  for (const auto& e : evals) out.push_back(g.profile_label(e.profile));
  return out;
}

// Minimum of ui over {q in simplex : uj.q >= c}, from the vertices of that
// polytope: pure strategies meeting the bound and edge points where it binds.
Rational vertex_oracle(const std::vector<Rational>& ui, const std::vector<Rational>& uj, const Rational& c,
                       const Rational& agreed_i) {
  if (*std::max_element(uj.begin(), uj.end()) <= c) return agreed_i;
  std::optional<Rational> best;
  auto consider = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  for (std::size_t k = 0; k < ui.size(); ++k)
    if (uj[k] >= c) consider(ui[k]);
  for (std::size_t k = 0; k < ui.size(); ++k)
    for (std::size_t l = 0; l < ui.size(); ++l) {
      if (!(uj[k] > c && uj[l] < c)) continue;
      Rational t = (c - uj[l]) / (uj[k] - uj[l]);  // weight on k
      consider(t * ui[k] + (1 - t) * ui[l]);
    }
  return *best;
}

}  // namespace

TEST_CASE("illustrative game value table") {
  auto g = named_game("figure1");
  auto table = value_table(g);
  std::vector<ValueVector> expected = {qs({100, 100}), qs({100, 0}), qs({0, 0}), qs({0, 100}), qs({0, 0}),
                                       qs({0, 5}),     qs({0, 0}),   qs({5, 0}),  qs({5, 5})};
  REQUIRE(table.size() == 9);
  for (std::size_t c = 0; c < 9; ++c) CHECK(table[c].value == expected[c]);
  CHECK(labels(g, optimin_pure(g)) == std::vector<std::string>{"Top,Left"});
  auto nash = nash_pure(g);
  REQUIRE(nash.size() == 1);
  CHECK(g.profile_label(nash[0]) == "Bottom,Right");
  auto m = maximin_profile(g);
  CHECK(m.security == qs({0, 0}));
  CHECK(m.strategies[0].size() == 3);
  CHECK(m.strategies[1].size() == 3);
}

TEST_CASE("worst-case witnesses") {
  auto g = named_game("figure1");
  auto e = value_pure(g, g.parse_profile("Bottom,Center"));
  CHECK(e.value == qs({5, 0}));
  CHECK(g.profile_label(e.witnesses[0]) == "Bottom,Right");
  CHECK(g.profile_label(e.witnesses[1]) == "Bottom,Center");
  auto br = better_responses(g, g.parse_profile("Top,Left"), 1);
  CHECK(br.responses == std::vector<std::size_t>{1});
  auto space = deviation_space(g, g.parse_profile("Top,Left"), 0);
  CHECK(space.options[0] == std::vector<std::size_t>{0});
  CHECK(space.options[1] == std::vector<std::size_t>{0, 1});
  auto wide = deviation_space(g, g.parse_profile("Top,Left"), 0, DeviationRule::unrestricted);
  CHECK(wide.options[1].size() == 3);
}

TEST_CASE("motivating game, prisoners dilemma, battle of the sexes") {
  auto m = named_game("motivating");
  CHECK(labels(m, optimin_pure(m)) == std::vector<std::string>{"U,L"});
  CHECK(nash_pure(m) == std::vector<PureProfile>{{0, 0}});
  auto mm = maximin_profile(m);
  CHECK(mm.strategies[0] == std::vector<std::size_t>{1});
  CHECK(mm.security[0] == 1);

  auto pd = named_game("prisoners_dilemma");
  CHECK(labels(pd, optimin_pure(pd)) == std::vector<std::string>{"Defect,Defect"});
  CHECK(value_pure(pd, {0, 0}).value == qs({0, 0}));

  auto bos = named_game("battle_of_sexes");
  CHECK(labels(bos, optimin_pure(bos)) == std::vector<std::string>{"Football,Football", "Opera,Opera"});
}

TEST_CASE("pure values agree with the brute-force reading of the definition") {
  support::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = support::random_small_game(rng);
    auto table = value_table(g, DeviationRule::better_response, 1 + trial % 3);
    for (const auto& e : table) CHECK(e.value == support::brute_value(g, e.profile));
    std::vector<PureProfile> opt;
    for (const auto& e : optimin_pure(g)) opt.push_back(e.profile);
    CHECK(opt == support::brute_optimin(g));
    CHECK(nash_pure(g, 2) == support::brute_nash(g));
  }
}

TEST_CASE("unrestricted deviations give security levels") {
  auto g = named_game("figure1");
  for (const auto& e : value_table(g, DeviationRule::unrestricted)) CHECK(e.value == qs({0, 0}));
}

TEST_CASE("mixed value at a degenerate agreement allows mixed deviations") {
  auto g = named_game("figure1");
  auto e = value_mixed_2p(g, MixedProfile::degenerate({0, 0}, g.strategy_counts()));
  CHECK(e.value == ValueVector{q(2000, 21), q(2000, 21)});
  CHECK(e.witnesses[0].probabilities[1] == ValueVector{q(0), q(20, 21), q(1, 21)});
  auto pure = value_pure(g, {0, 0});
  for (std::size_t i = 0; i < 2; ++i) CHECK(e.value[i] <= pure.value[i]);
}

TEST_CASE("mixed values match the polytope-vertex oracle") {
  support::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = support::random_game(rng, {std::size_t(rng.uniform(1, 3)), std::size_t(rng.uniform(1, 4))});
    auto rows = simplex_grid(g.num_strategies(0), 2);
    auto cols = simplex_grid(g.num_strategies(1), 2);
    MixedProfile p{{rows[rng.uniform(0, rows.size() - 1)], cols[rng.uniform(0, cols.size() - 1)]}};
    auto e = value_mixed_2p(g, p);
    auto agreed = expected_payoff(g, p);
    for (std::size_t i = 0; i < 2; ++i) {
      std::size_t j = 1 - i;
      std::vector<Rational> ui, uj;
      for (std::size_t k = 0; k < g.num_strategies(j); ++k) {
        MixedProfile dev = p;
        dev.probabilities[j].assign(g.num_strategies(j), Rational(0));
        dev.probabilities[j][k] = 1;
        auto pay = expected_payoff(g, dev);
        ui.push_back(pay[i]);
        uj.push_back(pay[j]);
      }
      CHECK(e.value[i] == vertex_oracle(ui, uj, agreed[j], agreed[i]));
      CHECK(e.value[i] <= agreed[i]);
      CHECK(expected_payoff(g, e.witnesses[i])[i] == e.value[i]);
    }
  }
}

TEST_CASE("simplex grid and grid search limits") {
  auto grid = simplex_grid(3, 2);
  CHECK(grid.size() == 6);
  CHECK(grid.front() == qs({1, 0, 0}));
  CHECK(grid.back() == qs({0, 0, 1}));
  CHECK(simplex_grid(1, 5).size() == 1);

  auto bos = named_game("battle_of_sexes");
  auto res = optimin_grid_2p(bos, 2);
  CHECK(res.profiles_evaluated == 9);
  CHECK_FALSE(res.points.empty());

  auto travelers = gen::travelers(2, 100, q(2));
  CHECK_THROWS_AS(optimin_grid_2p(travelers, 2), Error);
  try {
    optimin_grid_2p(travelers, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
  support::Rng rng(1);
  auto three = support::random_game(rng, {2, 2, 2});
  CHECK_THROWS_AS(value_mixed_2p(three, MixedProfile::degenerate({0, 0, 0}, three.strategy_counts())), Error);
}

TEST_CASE("optimin points are maximin equilibria") {
  support::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = support::random_small_game(rng);
    for (const auto& e : optimin_pure(g)) CHECK(is_maximin_equilibrium(g, e.profile));
  }
}
