#include "doctest.h"
#include "optimin/error.hpp"
#include "optimin/generators.hpp"
#include "optimin/io.hpp"
#include "optimin/noncoop.hpp"
#include "support.hpp"

using namespace optimin;
using support::q;
using support::qs;

namespace {

std::vector<std::string> optimin_labels(const NormalFormGame& g) {
  std::vector<std::string> out;
  for (const auto& e : optimin_pure(g)) out.push_back(g.profile_label(e.profile));
  return out;
}

// Value of (claim, claim) for one traveler, straight from the payoff rule.
Rational traveler_value(long claim, long lo, const Rational& r) {
  Rational worst = claim;
  for (long k = lo; k < claim; ++k)
    if (k + r > claim) worst = std::min(worst, Rational(k - r));
  return worst;
}

}  // namespace

TEST_CASE("traveler's dilemma matrix") {
  auto g = gen::travelers(2, 100, q(2));
  CHECK(g.num_strategies(0) == 99);
  CHECK(payoff(g, g.parse_profile("100,99")) == qs({97, 101}));
  CHECK(payoff(g, g.parse_profile("99,100")) == qs({101, 97}));
  for (long k = 2; k <= 100; k += 7) CHECK(payoff(g, g.parse_profile(std::to_string(k) + "," + std::to_string(k))) == qs({k, k}));
  for (long a = 2; a <= 100; a += 5)
    for (long b = 2; b < a; b += 3) {
      auto hi = payoff(g, {std::size_t(a - 2), std::size_t(b - 2)});
      auto lo = payoff(g, {std::size_t(b - 2), std::size_t(a - 2)});
      CHECK(hi == ValueVector{b - q(2), b + q(2)});
      CHECK(lo == ValueVector{hi[1], hi[0]});
    }
  CHECK(nash_pure(g) == std::vector<PureProfile>{{0, 0}});
  CHECK_THROWS_AS(gen::travelers(2, 100, q(1)), Error);
  CHECK_THROWS_AS(gen::travelers(5, 5, q(2)), Error);
}

TEST_CASE("traveler's dilemma crossover against the direct value comparison") {
  auto sweep = gen::sweep("travelers", {{"min", "2"}, {"max", "30"}}, "r", gen::parameter_range(q(2), q(20), q(1)));
  std::optional<long> oracle;
  for (long r = 2; r <= 20 && !oracle; ++r)
    if (traveler_value(30, 2, q(r)) < 2) oracle = r;
  REQUIRE(oracle.has_value());
  REQUIRE(sweep.threshold.has_value());
  CHECK(*sweep.threshold == *oracle);
  CHECK(sweep.rows.front().optimin == std::vector<std::string>{"30,30"});
}

TEST_CASE("centipede reduced normal form") {
  auto c = gen::centipede(4, gen::CentipedeVariant::increasing);
  CHECK(c.strategies()[0] == std::vector<std::string>{"stop1", "stop2", "continue"});
  CHECK(payoff(c, c.parse_profile("stop1,stop1")) == qs({4, 1}));
  CHECK(payoff(c, c.parse_profile("continue,stop1")) == qs({2, 8}));
  CHECK(payoff(c, c.parse_profile("continue,continue")) == qs({64, 16}));
  auto k = gen::centipede(4, gen::CentipedeVariant::constant);
  for (const auto& p : support::all_profiles(k)) CHECK(payoff(k, p)[0] + payoff(k, p)[1] == 10);
  CHECK(gen::centipede(1, gen::CentipedeVariant::increasing).num_strategies(1) == 1);
  for (unsigned nodes = 4; nodes <= 8; ++nodes)
    CHECK(optimin_labels(gen::centipede(nodes, gen::CentipedeVariant::increasing)) ==
          std::vector<std::string>{"continue,continue"});
  for (unsigned nodes = 1; nodes <= 8; ++nodes) {
    auto g = gen::centipede(nodes, gen::CentipedeVariant::constant);
    CHECK(optimin_labels(g) == std::vector<std::string>{nodes == 1 ? "stop1,continue" : "stop1,stop1"});
  }
}

TEST_CASE("prisoner's dilemma") {
  auto pd = gen::prisoners_dilemma(q(5), q(3), q(1), q(0));
  CHECK(optimin_labels(pd) == std::vector<std::string>{"Defect,Defect"});
  CHECK(nash_pure(pd) == std::vector<PureProfile>{{1, 1}});
  auto cc = payoff(pd, {0, 0}), dd = payoff(pd, {1, 1});
  CHECK(cc[0] > dd[0]);
  CHECK(cc[1] > dd[1]);
  CHECK(value_pure(pd, {0, 0}).value == qs({0, 0}));
  CHECK_THROWS_AS(gen::prisoners_dilemma(q(3), q(5), q(1), q(0)), Error);
  support::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    long s = rng.uniform(-5, 5), p = s + rng.uniform(1, 4), r = p + rng.uniform(1, 4), t = r + rng.uniform(1, 4);
    auto g = gen::prisoners_dilemma(q(t), q(r), q(p), q(s));
    for (std::size_t other = 0; other < 2; ++other)
      for (std::size_t i = 0; i < 2; ++i) {
        PureProfile prof(2, other);
        prof[i] = 0;
        CHECK(better_responses(g, prof, i).responses == std::vector<std::size_t>{1});
      }
  }
}

TEST_CASE("public goods game") {
  auto low = gen::public_goods(2, q(10), q(2, 5), qs({0, 10}));
  CHECK(nash_pure(low) == std::vector<PureProfile>{{0, 0}});
  CHECK(payoff(low, {1, 1}) == qs({8, 8}));
  CHECK(optimin_labels(gen::public_goods(2, q(10), q(1, 10), qs({0, 10}))) == std::vector<std::string>{"0,0"});
  // Contributing exposes a player to the partner's free-riding, which pays
  // m * e < e, so with m < 1 the all-zero profile stays the unique optimin point.
  auto high = gen::public_goods(2, q(10), q(9, 10), qs({0, 10}));
  CHECK(value_pure(high, {1, 1}).value == qs({9, 9}));
  CHECK(value_pure(high, {0, 0}).value == qs({10, 10}));
  CHECK(optimin_labels(high) == std::vector<std::string>{"0,0"});
  CHECK(optimin_labels(gen::public_goods(2, q(10), q(1), qs({0, 10}))) == std::vector<std::string>{"10,10"});
  auto sweep = gen::sweep("public_goods", {}, "m", gen::parameter_range(q(1, 10), q(3, 2), q(1, 10)));
  REQUIRE(sweep.threshold.has_value());
  CHECK(*sweep.threshold == 1);
  CHECK_THROWS_AS(gen::public_goods(1, q(10), q(1, 2), qs({0, 10})), Error);
  CHECK_THROWS_AS(gen::public_goods(2, q(10), q(1, 2), qs({0, 11})), Error);
  CHECK(gen::public_goods(3, q(6), q(1, 2), qs({0, 3, 6})).num_cells() == 27);
}

TEST_CASE("named instances") {
  auto f = std::get<NormalFormGame>(gen::named("figure1"));
  CHECK(payoff(f, f.parse_profile("Top,Left")) == qs({100, 100}));
  CHECK(payoff(f, f.parse_profile("Middle,Right")) == qs({0, 210}));
  auto m = std::get<NormalFormGame>(gen::named("motivating"));
  CHECK(payoff(m, m.parse_profile("U,R")) == qs({0, 1}));
  auto tu = std::get<coop::TUGame>(gen::named("coop_empty_core"));
  CHECK(tu.worth(coop::parse_coalition("1,2", 3)) == 90);
  CHECK(tu.worth(7) == 110);
  CHECK(std::get<coop::TUGame>(gen::named("coop_120")).worth(7) == 120);
  CHECK_THROWS_AS(gen::named("nope"), Error);
  CHECK_THROWS_AS(gen::family("nope", {}), Error);
}

TEST_CASE("sweeps are ordered and independent of the thread count") {
  auto values = gen::parameter_range(q(1), q(8), q(1));
  auto one = gen::sweep("centipede", {}, "nodes", values, 1);
  auto four = gen::sweep("centipede", {}, "nodes", values, 4);
  REQUIRE(one.rows.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(one.rows[k].parameter == k + 1);
    CHECK(one.rows[k].optimin == four.rows[k].optimin);
  }
  CHECK(one.rows[3].optimin == std::vector<std::string>{"continue,continue"});
  CHECK_THROWS_AS(gen::parameter_range(q(1), q(0), q(1)), Error);
}

TEST_CASE("files round-trip byte for byte") {
  std::vector<NormalFormGame> games = {gen::travelers(2, 12, q(5, 2)), gen::centipede(5, gen::CentipedeVariant::constant),
                                       gen::prisoners_dilemma(q(5), q(3), q(1), q(0)),
                                       gen::public_goods(3, q(10), q(9, 10), qs({0, 5, 10}))};
  for (const auto& tag : gen::named_tags()) {
    auto named = gen::named(tag);
    if (auto* g = std::get_if<NormalFormGame>(&named)) {
      games.push_back(*g);
    } else {
      auto text = io::write_tu(std::get<coop::TUGame>(named));
      CHECK(io::detect(text) == io::FileKind::tu);
      CHECK(io::parse_tu(text) == std::get<coop::TUGame>(named));
      CHECK(io::write_tu(io::parse_tu(text)) == text);
    }
  }
  for (const auto& g : games) {
    auto text = io::write_game(g);
    CHECK(io::detect(text) == io::FileKind::game);
    auto back = io::parse_game(text);
    CHECK(back == g);
    CHECK(io::write_game(back) == text);
  }
  auto marriage = gen::named_marriage("marriage3");
  auto mtext = io::write_marriage(marriage);
  CHECK(io::write_marriage(io::parse_marriage(mtext)) == mtext);
  io::DecisionFile d{gen::named_decision("mortgage"), {}};
  d.oc.states.by_act[0] = {0};
  auto dtext = io::write_decision(d);
  auto dback = io::parse_decision(dtext);
  CHECK(dback.problem == d.problem);
  CHECK(io::write_decision(dback) == dtext);
}

TEST_CASE("game files") {
  auto g = io::parse_game(R"({"players":["1","2"],"strategies":[["U","D"],["L"]],"payoffs":[[[1,"1/2"]],[["0.5",-3]]]})");
  CHECK(g.at({0, 0}, 1) == q(1, 2));
  CHECK(g.at({1, 0}, 0) == q(1, 2));
  auto message = [](const std::string& text) {
    try {
      io::parse_game(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"players":["1","2"],"strategies":[["U","D"],["L"]],"payoffs":[[[1,2]],[[1]]]})").find("/payoffs/1/0") !=
        std::string::npos);
  CHECK(message(R"({"players":["1","2"],"strategies":[["U","D"],["L"]],"payoffs":[[[1,2]],[[1,"x"]]]})").find("/payoffs/1/0/1") !=
        std::string::npos);
  CHECK(message(R"({"players":["1","2"],"strategies":[["U","D"],["L"]],"payoffs":[[[1,2]]]})").find("/payoffs") !=
        std::string::npos);
  CHECK(message(R"({"players":["1"],"payoffs":[]})").find("/strategies") != std::string::npos);
  CHECK(message(R"({"players":["1"],"strategies":[["a"]],"payoffs":[[1.5]]})").find("/payoffs/0/0") != std::string::npos);
  CHECK(message("{not json").find("parse") != std::string::npos);
}

TEST_CASE("cooperative, matching and decision files") {
  auto tu = io::parse_tu(R"({"n":2,"worth":{"1":1,"2":2,"1,2":"7/2"}})");
  CHECK(tu.worth(3) == q(7, 2));
  try {
    io::parse_tu(R"({"n":2,"worth":{"1":1,"1,2":4}})");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/worth/2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_tu(R"({"n":2,"worth":{"1":1,"2":1,"2,1":4}})"), Error);

  auto m = io::parse_marriage(R"({"A":["a1","a2"],"B":["b1","b2"],
    "prefs":{"a1":["b2","a1"],"a2":["b1","b2","a2"],"b1":["a1","a2","b1"],"b2":["a2"]}})");
  CHECK(m.ranking(0) == std::vector<std::size_t>{3, 0, 2});
  CHECK(m.ranking(3) == std::vector<std::size_t>{1, 3, 0});
  CHECK_FALSE(m.acceptable(0, 2));
  try {
    io::parse_marriage(R"({"A":["a1"],"B":["b1"],"prefs":{"a1":["a1"],"b1":["zz"]}})");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/prefs/b1/0") != std::string::npos);
  }

  auto d = io::parse_decision(R"({"acts":["buy","rent"],"states":["boom","bust"],
    "utility":[[10,-5],[2,2]],"oc":{"*":["boom","bust"],"buy,*":["boom"]}})");
  CHECK(decisions::decision_value(d.problem, d.oc, 0, 1) == qs({10}));
  CHECK(decisions::decision_value(d.problem, d.oc, 1, 1) == qs({2}));
  try {
    io::parse_decision(R"({"acts":["a"],"states":["s"],"utility":[[1]],"oc":{"a,q":["s"]}})");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/oc/a,q") != std::string::npos);
  }
  CHECK_THROWS_AS(io::detect(R"({"x":1})"), Error);
}
