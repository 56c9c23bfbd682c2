#include "optimin/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "optimin/coop.hpp"
#include "optimin/error.hpp"
#include "optimin/noncoop.hpp"
#include "optimin/zerosum.hpp"

namespace optimin {

namespace {

std::string render(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? " " : "") + std::string("(") + items[k] + ")";
  return out + "}";
}

class Runner {
 public:
  Runner(const InstanceProvider& provider, unsigned threads) : provider_(provider), threads_(threads) {}

  NormalFormGame game(const std::string& tag) { return std::get<NormalFormGame>(provider_(tag)); }
  coop::TUGame tu(const std::string& tag) { return std::get<coop::TUGame>(provider_(tag)); }
  unsigned threads() const { return threads_; }

  // fn returns "" on success, otherwise the mismatch description.
  template <class Fn>
  void check(const std::string& name, Fn fn) {
    CheckResult r{name, false, ""};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const InstanceProvider& provider_;
  unsigned threads_;
  std::vector<CheckResult> results_;
};

std::string expect(const std::string& expected, const std::string& actual) {
  return expected == actual ? "" : "expected " + expected + ", got " + actual;
}

std::string optimin_set(const NormalFormGame& g, unsigned threads) {
  std::vector<std::string> labels;
  for (const auto& e : optimin_pure(g, DeviationRule::better_response, threads)) labels.push_back(g.profile_label(e.profile));
  return render(labels);
}

std::string nash_set(const NormalFormGame& g, unsigned threads) {
  std::vector<std::string> labels;
  for (const auto& p : nash_pure(g, threads)) labels.push_back(g.profile_label(p));
  return render(labels);
}

void noncooperative(Runner& run) {
  run.check("figure1.value_table", [&] {
    auto g = run.game("figure1");
    std::string got;
    for (const auto& e : value_table(g, DeviationRule::better_response, run.threads()))
      got += (got.empty() ? "" : " ") + join(e.value);
    return expect("100,100 100,0 0,0 0,100 0,0 0,5 0,0 5,0 5,5", got);
  });
  run.check("figure1.optimin", [&] { return expect("{(Top,Left)}", optimin_set(run.game("figure1"), run.threads())); });
  run.check("figure1.nash", [&] { return expect("{(Bottom,Right)}", nash_set(run.game("figure1"), run.threads())); });
  run.check("figure1.maximin_security", [&] {
    auto m = maximin_profile(run.game("figure1"));
    std::string got;
    for (const auto& per_player : m.strategy_security) got += (got.empty() ? "" : " ") + join(per_player);
    return expect("0,0,0 0,0,0", got);
  });
  run.check("motivating.optimin", [&] { return expect("{(U,L)}", optimin_set(run.game("motivating"), run.threads())); });
  run.check("motivating.nash", [&] { return expect("{(U,L)}", nash_set(run.game("motivating"), run.threads())); });
  run.check("motivating.maximin", [&] {
    auto g = run.game("motivating");
    auto m = maximin_profile(g);
    std::string got;
    for (std::size_t s : m.strategies[0]) got += g.strategy_label(0, s) + " ";
    return expect("D security 1", got + "security " + to_string(m.security[0]));
  });
  run.check("prisoners_dilemma.optimin",
            [&] { return expect("{(Defect,Defect)}", optimin_set(run.game("prisoners_dilemma"), run.threads())); });
  run.check("battle_of_sexes.optimin", [&] {
    return expect("{(Football,Football) (Opera,Opera)}", optimin_set(run.game("battle_of_sexes"), run.threads()));
  });
  run.check("travelers.cell", [&] {
    auto g = gen::travelers(2, 100, 2);
    return expect("97,101", join(payoff(g, g.parse_profile("100,99"))));
  });
  run.check("travelers.nash", [&] { return expect("{(2,2)}", nash_set(gen::travelers(2, 100, 2), run.threads())); });
  run.check("travelers.optimin_low_reward",
            [&] { return expect("{(100,100)}", optimin_set(gen::travelers(2, 100, 2), run.threads())); });
  run.check("centipede.increasing", [&] {
    std::string got;
    for (unsigned nodes = 4; nodes <= 8; ++nodes)
      got += optimin_set(gen::centipede(nodes, gen::CentipedeVariant::increasing), run.threads());
    std::string want;
    for (unsigned nodes = 4; nodes <= 8; ++nodes) want += "{(continue,continue)}";
    return expect(want, got);
  });
  run.check("centipede.constant", [&] {
    std::string got, want;
    for (unsigned nodes = 2; nodes <= 8; ++nodes) {
      got += optimin_set(gen::centipede(nodes, gen::CentipedeVariant::constant), run.threads());
      want += "{(stop1,stop1)}";
    }
    return expect(want, got);
  });
}

void cooperative(Runner& run) {
  run.check("coop_empty_core.core", [&] { return expect("empty", coop::core(run.tu("coop_empty_core")).empty ? "empty" : "nonempty"); });
  run.check("coop_empty_core.shapley",
            [&] { return expect("265/6,110/3,175/6", join(coop::shapley(run.tu("coop_empty_core")))); });
  run.check("coop_empty_core.nucleolus",
            [&] { return expect("140/3,110/3,80/3", join(coop::nucleolus(run.tu("coop_empty_core")))); });
  run.check("coop_empty_core.value", [&] {
    return expect("40,30,25", join(coop::coop_value(run.tu("coop_empty_core"), {Rational(40), Rational(30), Rational(40)})));
  });
  run.check("coop_empty_core.grid_optimin", [&] {
    auto grid = coop::optimin_coop(run.tu("coop_empty_core"), Rational(1), Rational(0), run.threads());
    std::string got, want;
    for (const auto& p : grid.points) got += join(p.x) + " ";
    for (int x2 = 30; x2 <= 45; ++x2) want += "40," + std::to_string(x2) + "," + std::to_string(70 - x2) + " ";
    return expect(want, got);
  });
  run.check("coop_120.core", [&] {
    auto t = run.tu("coop_120");
    auto bounds = coop::core_bounds(t);
    if (!bounds) return std::string("expected nonempty core");
    std::string got;
    for (const auto& [lo, hi] : *bounds) got += (got.empty() ? "" : " ") + to_string(lo) + ".." + to_string(hi);
    return expect("50..50 40..40 30..30", got);
  });
  run.check("coop_120.nucleolus", [&] { return expect("50,40,30", join(coop::nucleolus(run.tu("coop_120")))); });
  run.check("coop_120.shapley", [&] { return expect("95/2,40,65/2", join(coop::shapley(run.tu("coop_120")))); });
  run.check("coop_120.grid_optimin", [&] {
    auto grid = coop::optimin_coop(run.tu("coop_120"), Rational(1), Rational(0), run.threads());
    std::string got;
    for (const auto& p : grid.points) got += (got.empty() ? "" : " ") + join(p.x);
    return expect("50,40,30", got);
  });
}

void statistical(Runner& run) {
  run.check("bulmer.maximin", [&] {
    StatisticalGame sg(run.game("bulmer"));
    auto stat = maximin_lp(sg, 0);
    auto nature = maximin_lp(sg, 1);
    return expect("1/5,0,0,4/5 value 3/5 | 2/5,3/5",
                  join(stat.mixture) + " value " + to_string(stat.value) + " | " + join(nature.mixture));
  });
  run.check("bulmer.optimin_is_maximin", [&] {
    StatisticalGame sg(run.game("bulmer"));
    MixedProfile p{{{make_rational(1, 5), 0, 0, make_rational(4, 5)}, {make_rational(2, 5), make_rational(3, 5)}}};
    return expect("true", optimin_equals_maximin_check(sg, p) ? "true" : "false");
  });
}

}  // namespace

std::vector<CheckResult> run_selftest(const InstanceProvider& provider, unsigned threads) {
  Runner run(provider, threads);
  noncooperative(run);
  cooperative(run);
  statistical(run);
  return run.take();
}

std::string format_selftest(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << "\n";
    } else {
      out << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  out << "selftest: " << passed << "/" << results.size() << " passed\n";
  return out.str();
}

}  // namespace optimin
