#include "optimin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "optimin/coop.hpp"
#include "optimin/decisions.hpp"
#include "optimin/error.hpp"
#include "optimin/generators.hpp"
#include "optimin/io.hpp"
#include "optimin/matching.hpp"
#include "optimin/noncoop.hpp"
#include "optimin/selftest.hpp"
#include "optimin/zerosum.hpp"

namespace optimin::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  unsigned threads = 1;
  std::string game;
  bool pure = false;
  unsigned grid = 0;
  std::string profile;
  std::string mixed;
  std::string step = "1";
  std::string widen = "0";
  std::string allocation;
  std::string matching;
  std::string target;
  std::vector<std::string> params;
  std::string out_path;
  std::string vary;
  std::string from, to, by = "1";
};

bool table(const Options& o) { return o.format == "table"; }

std::string num(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  return to_string(r) + " (" + to_decimal(r) + ")";
}

std::string vec(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + num(v[k]);
  return out + ")";
}

json jnum(const Rational& r) { return to_string(r); }

json jvec(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(jnum(r));
  return arr;
}

std::string mixture_label(const MixedProfile& p) {
  std::string out;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) out += (i ? " | " : "") + join(p.probabilities[i]);
  return out;
}

json jmixture(const MixedProfile& p) {
  json arr = json::array();
  for (const auto& probs : p.probabilities) arr.push_back(jvec(probs));
  return arr;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

MixedProfile parse_mixed(const std::string& text) {
  MixedProfile p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) p.probabilities.push_back(parse_list(part));
  return p;
}

bool is_tag(const std::string& name) {
  auto tags = gen::named_tags();
  return std::find(tags.begin(), tags.end(), name) != tags.end();
}

NormalFormGame load_game(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::parameter, "--game is required");
  if (is_tag(source)) {
    auto named = gen::named(source);
    if (auto* g = std::get_if<NormalFormGame>(&named)) return *g;
    throw Error(ErrorKind::parameter, source + " is a cooperative game; use the coop command");
  }
  std::string text = io::read_file(source);
  if (io::detect(text) != io::FileKind::game) throw Error(ErrorKind::parameter, source + " is not a game file");
  return io::parse_game(text);
}

coop::TUGame load_tu(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::parameter, "--game is required");
  if (is_tag(source)) {
    auto named = gen::named(source);
    if (auto* g = std::get_if<coop::TUGame>(&named)) return *g;
    throw Error(ErrorKind::parameter, source + " is not a cooperative game");
  }
  return io::parse_tu(io::read_file(source));
}

matching::MarriageProblem load_marriage(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::parameter, "--game is required");
  if (source == "marriage3") return gen::named_marriage(source);
  return io::parse_marriage(io::read_file(source));
}

io::DecisionFile load_decision(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::parameter, "--game is required");
  if (source == "mortgage") return {gen::named_decision(source), {}};
  return io::parse_decision(io::read_file(source));
}

gen::Params parse_params(const std::vector<std::string>& items) {
  gen::Params params;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::parameter, "parameter must be key=value: " + item);
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ---- noncooperative -------------------------------------------------------

void cmd_optimin(const Options& o, std::ostream& out) {
  auto game = load_game(o.game);
  if (o.grid > 0) {
    auto grid = optimin_grid_2p(game, o.grid, o.threads);
    if (table(o)) {
      out << "mode: mixed-grid k=" << o.grid << " (approximate)\n";
      out << "profiles evaluated: " << grid.profiles_evaluated << "\n";
      out << "optimin grid points: " << grid.points.size() << "\n";
      for (const auto& p : grid.points) out << "  " << mixture_label(p.profile) << "  value " << vec(p.value) << "\n";
    } else {
      json doc{{"mode", "mixed-grid"}, {"k", o.grid}, {"approximate", true},
               {"profiles_evaluated", grid.profiles_evaluated}};
      json pts = json::array();
      for (const auto& p : grid.points) pts.push_back({{"profile", jmixture(p.profile)}, {"value", jvec(p.value)}});
      doc["optimin"] = pts;
      emit(out, doc);
    }
    return;
  }
  auto result = optimin_pure(game, DeviationRule::better_response, o.threads);
  if (table(o)) {
    out << "mode: pure\n";
    out << "optimin profiles: " << result.size() << "\n";
    for (const auto& e : result) out << "  " << game.profile_label(e.profile) << "  value " << vec(e.value) << "\n";
  } else {
    json pts = json::array();
    for (const auto& e : result)
      pts.push_back({{"profile", game.profile_label(e.profile)}, {"value", jvec(e.value)}});
    emit(out, json{{"mode", "pure"}, {"optimin", pts}});
  }
}

void cmd_value(const Options& o, std::ostream& out) {
  auto game = load_game(o.game);
  if (!o.mixed.empty()) {
    auto eval = value_mixed_2p(game, parse_mixed(o.mixed));
    if (table(o)) {
      out << "mode: mixed\n";
      out << "profile: " << mixture_label(eval.profile) << "\n";
      out << "value: " << vec(eval.value) << "\n";
      for (std::size_t i = 0; i < eval.witnesses.size(); ++i)
        out << "  worst case for " << game.players()[i] << ": " << mixture_label(eval.witnesses[i]) << "\n";
    } else {
      json w = json::array();
      for (const auto& m : eval.witnesses) w.push_back(jmixture(m));
      emit(out, json{{"mode", "mixed"}, {"profile", jmixture(eval.profile)}, {"value", jvec(eval.value)},
                     {"witnesses", w}});
    }
    return;
  }
  if (o.profile.empty()) throw Error(ErrorKind::parameter, "--profile or --mixed is required");
  auto eval = value_pure(game, game.parse_profile(o.profile));
  if (table(o)) {
    out << "mode: pure\n";
    out << "profile: " << game.profile_label(eval.profile) << "\n";
    out << "value: " << vec(eval.value) << "\n";
    for (std::size_t i = 0; i < eval.witnesses.size(); ++i)
      out << "  worst case for " << game.players()[i] << ": " << game.profile_label(eval.witnesses[i]) << "\n";
  } else {
    json w = json::array();
    for (const auto& p : eval.witnesses) w.push_back(game.profile_label(p));
    emit(out, json{{"mode", "pure"}, {"profile", game.profile_label(eval.profile)}, {"value", jvec(eval.value)},
                   {"witnesses", w}});
  }
}

void cmd_nash(const Options& o, std::ostream& out) {
  auto game = load_game(o.game);
  auto eq = nash_pure(game, o.threads);
  if (table(o)) {
    out << "mode: pure\n";
    out << "nash equilibria: " << eq.size() << "\n";
    for (const auto& p : eq) out << "  " << game.profile_label(p) << "  payoff " << vec(payoff(game, p)) << "\n";
  } else {
    json arr = json::array();
    for (const auto& p : eq) arr.push_back({{"profile", game.profile_label(p)}, {"payoff", jvec(payoff(game, p))}});
    emit(out, json{{"mode", "pure"}, {"nash", arr}});
  }
}

void cmd_maximin(const Options& o, std::ostream& out) {
  auto game = load_game(o.game);
  auto m = maximin_profile(game);
  if (table(o)) {
    out << "mode: pure\n";
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      out << "player " << game.players()[i] << ": security " << num(m.security[i]) << ", maximin strategies:";
      for (std::size_t s : m.strategies[i]) out << " " << game.strategy_label(i, s);
      out << "\n";
      for (std::size_t s = 0; s < game.num_strategies(i); ++s)
        out << "  " << game.strategy_label(i, s) << "  guarantees " << num(m.strategy_security[i][s]) << "\n";
    }
  } else {
    json players = json::array();
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      json strategies = json::array();
      for (std::size_t s : m.strategies[i]) strategies.push_back(game.strategy_label(i, s));
      json guarantees = json::object();
      for (std::size_t s = 0; s < game.num_strategies(i); ++s)
        guarantees[game.strategy_label(i, s)] = jnum(m.strategy_security[i][s]);
      players.push_back({{"player", game.players()[i]}, {"security", jnum(m.security[i])},
                         {"strategies", strategies}, {"guarantees", guarantees}});
    }
    emit(out, json{{"mode", "pure"}, {"maximin", players}});
  }
}

void cmd_zerosum_solve(const Options& o, std::ostream& out) {
  StatisticalGame sg(load_game(o.game));
  const auto& game = sg.game();
  MaximinStrategy s[2] = {maximin_lp(sg, 0), maximin_lp(sg, 1)};
  if (table(o)) {
    out << "mode: mixed (exact LP)\n";
    out << "value: " << num(s[0].value) << "\n";
    for (std::size_t i = 0; i < 2; ++i) {
      out << "player " << game.players()[i] << ": guarantee " << num(s[i].value) << "\n";
      for (std::size_t k = 0; k < s[i].mixture.size(); ++k)
        out << "  " << game.strategy_label(i, k) << "  " << num(s[i].mixture[k]) << "\n";
    }
  } else {
    json players = json::array();
    for (std::size_t i = 0; i < 2; ++i)
      players.push_back({{"player", game.players()[i]}, {"mixture", jvec(s[i].mixture)}, {"guarantee", jnum(s[i].value)}});
    emit(out, json{{"mode", "mixed"}, {"value", jnum(s[0].value)}, {"maximin", players}});
  }
}

void cmd_zerosum_check(const Options& o, std::ostream& out) {
  StatisticalGame sg(load_game(o.game));
  if (o.mixed.empty()) throw Error(ErrorKind::parameter, "--mixed is required");
  auto profile = parse_mixed(o.mixed);
  bool ok = optimin_equals_maximin_check(sg, profile);
  Rational g0 = guarantee(sg, 0, profile.probabilities.at(0)), g1 = guarantee(sg, 1, profile.probabilities.at(1));
  if (table(o)) {
    out << "mode: mixed (exact LP)\n";
    out << "profile: " << mixture_label(profile) << "\n";
    out << "guarantees: " << vec({g0, g1}) << "\n";
    out << "maximin pair: " << (ok ? "yes" : "no") << "\n";
  } else {
    emit(out, json{{"mode", "mixed"}, {"profile", jmixture(profile)}, {"guarantees", jvec({g0, g1})},
                   {"maximin_pair", ok}});
  }
}

// ---- cooperative ----------------------------------------------------------

void cmd_coop_optimin(const Options& o, std::ostream& out) {
  auto game = load_tu(o.game);
  Rational step = parse_rational(o.step), widen = parse_rational(o.widen);
  auto grid = coop::optimin_coop(game, step, widen, o.threads);
  if (table(o)) {
    out << "mode: grid-step " << to_string(step) << (widen != 0 ? " widen " + to_string(widen) : "")
        << " (approximate)\n";
    out << "lattice points: " << grid.lattice_size << "\n";
    if (grid.imputations_empty) out << "imputation set on this lattice is empty\n";
    out << "optimin allocations: " << grid.points.size() << "\n";
    for (const auto& p : grid.points) out << "  " << vec(p.x) << "  value " << vec(p.value) << "\n";
  } else {
    json pts = json::array();
    for (const auto& p : grid.points) pts.push_back({{"allocation", jvec(p.x)}, {"value", jvec(p.value)}});
    emit(out, json{{"mode", "grid-step"}, {"step", jnum(step)}, {"widen", jnum(widen)}, {"approximate", true},
                   {"lattice_points", grid.lattice_size}, {"imputations_empty", grid.imputations_empty},
                   {"optimin", pts}});
  }
}

void cmd_coop_core(const Options& o, std::ostream& out) {
  auto game = load_tu(o.game);
  auto result = coop::core(game);
  auto bounds = coop::core_bounds(game);
  if (table(o)) {
    out << "mode: exact LP\n";
    if (result.empty) {
      out << "core: empty\n";
      return;
    }
    out << "core: nonempty, witness " << vec(result.witness) << "\n";
    for (std::size_t i = 0; i < bounds->size(); ++i)
      out << "  x" << i + 1 << " in [" << num((*bounds)[i].first) << ", " << num((*bounds)[i].second) << "]\n";
  } else {
    json doc{{"mode", "exact"}, {"empty", result.empty}};
    if (!result.empty) {
      doc["witness"] = jvec(result.witness);
      json b = json::array();
      for (const auto& [lo, hi] : *bounds) b.push_back(json::array({jnum(lo), jnum(hi)}));
      doc["bounds"] = b;
    }
    emit(out, doc);
  }
}

void cmd_coop_vector(const Options& o, std::ostream& out, const std::string& name, const coop::Allocation& x) {
  if (table(o)) {
    out << "mode: exact\n";
    out << name << ": " << vec(x) << "\n";
  } else {
    emit(out, json{{"mode", "exact"}, {name, jvec(x)}});
  }
}

void cmd_coop_value(const Options& o, std::ostream& out) {
  auto game = load_tu(o.game);
  if (o.allocation.empty()) throw Error(ErrorKind::parameter, "--allocation is required");
  auto x = parse_list(o.allocation);
  auto v = coop::coop_value(game, x);
  if (table(o)) {
    out << "mode: exact\n";
    out << "allocation: " << vec(x) << "\n";
    out << "value: " << vec(v) << "\n";
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      auto ds = coop::dominating_coalitions(game, x, i);
      out << "  player " << i + 1 << " threatened by:";
      if (ds.empty()) out << " none";
      for (auto s : ds) out << " {" << coop::coalition_label(s) << "}";
      out << "\n";
    }
  } else {
    emit(out, json{{"mode", "exact"}, {"allocation", jvec(x)}, {"value", jvec(v)}});
  }
}

// ---- matching and decisions -----------------------------------------------

void cmd_match(const Options& o, std::ostream& out) {
  auto problem = load_marriage(o.game);
  auto label = [&](const matching::Matching& m) { return matching::to_string(problem, m); };
  auto rank_vec = [&](const matching::Matching& m) {
    auto v = matching::matching_value(problem, m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v.worst.size(); ++i) names.push_back(problem.label(i) + ":" + problem.label(v.worst[i]));
    return names;
  };
  auto join_names = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  if (!o.matching.empty()) {
    matching::Matching m = matching::Matching::all_single(problem.population());
    std::stringstream ss(o.matching);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto dash = item.find('-');
      auto a = problem.find(item.substr(0, dash));
      if (!a) throw Error(ErrorKind::parameter, "unknown individual in matching: " + item);
      if (dash == std::string::npos) continue;
      auto b = problem.find(item.substr(dash + 1));
      if (!b) throw Error(ErrorKind::parameter, "unknown individual in matching: " + item);
      m.partner[*a] = *b;
      m.partner[*b] = *a;
    }
    auto report = matching::is_stable(problem, m);
    std::string why = report.stable ? "" :
                      report.unhappy ? problem.label(*report.unhappy) + " prefers being single" :
                      "blocking pair " + problem.label(report.blocking->first) + "-" + problem.label(report.blocking->second);
    if (table(o)) {
      out << "mode: pure\n";
      out << "matching: " << label(m) << "\n";
      out << "stable: " << (report.stable ? "yes" : "no, " + why) << "\n";
      out << "worst outcomes: " << join_names(rank_vec(m)) << "\n";
    } else {
      emit(out, json{{"mode", "pure"}, {"matching", label(m)}, {"stable", report.stable}, {"reason", why},
                     {"worst", rank_vec(m)}});
    }
    return;
  }
  auto a_opt = matching::deferred_acceptance(problem, matching::Side::A);
  auto b_opt = matching::deferred_acceptance(problem, matching::Side::B);
  auto optimin = matching::optimin_matchings(problem);
  if (table(o)) {
    out << "mode: pure\n";
    out << "deferred acceptance (A proposing): " << label(a_opt) << "\n";
    out << "deferred acceptance (B proposing): " << label(b_opt) << "\n";
    out << "optimin matchings: " << optimin.size() << "\n";
    for (const auto& m : optimin)
      out << "  " << label(m) << (matching::is_stable(problem, m).stable ? "  [stable]" : "") << "  worst "
          << join_names(rank_vec(m)) << "\n";
  } else {
    json arr = json::array();
    for (const auto& m : optimin)
      arr.push_back({{"matching", label(m)}, {"stable", matching::is_stable(problem, m).stable}, {"worst", rank_vec(m)}});
    emit(out, json{{"mode", "pure"}, {"deferred_acceptance_A", label(a_opt)}, {"deferred_acceptance_B", label(b_opt)},
                   {"optimin", arr}});
  }
}

void cmd_decide(const Options& o, std::ostream& out) {
  auto file = load_decision(o.game);
  const auto& p = file.problem;
  auto result = decisions::optimin_acts(p, file.oc);
  auto check = decisions::gilboa_reduction_check(p, file.oc);
  auto acts = [&](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t a : v) s += (s.empty() ? "" : " ") + p.acts()[a];
    return s;
  };
  if (table(o)) {
    out << "mode: pure\n";
    if (result.ranked_by_first_only) out << "ranking: by the decision maker's value alone (Nature has no utility)\n";
    out << "optimin profiles: " << result.profiles.size() << "\n";
    for (const auto& ap : result.profiles)
      out << "  " << p.acts()[ap.act] << "," << p.states()[ap.state] << "  value " << vec(ap.value) << "\n";
    out << "maxmin reduction: " << check.reason;
    if (check.hypotheses_hold)
      out << "; optimin acts {" << acts(check.optimin_act_set) << "} vs maxmin acts {" << acts(check.maxmin_act_set)
          << "}: " << (check.agrees ? "agree" : "DISAGREE");
    out << "\n";
  } else {
    json arr = json::array();
    for (const auto& ap : result.profiles)
      arr.push_back({{"act", p.acts()[ap.act]}, {"state", p.states()[ap.state]}, {"value", jvec(ap.value)}});
    json red{{"hypotheses_hold", check.hypotheses_hold}, {"reason", check.reason}};
    if (check.hypotheses_hold) red["agrees"] = check.agrees;
    emit(out, json{{"mode", "pure"}, {"ranked_by_first_only", result.ranked_by_first_only}, {"optimin", arr},
                   {"reduction", red}});
  }
}

// ---- generation -----------------------------------------------------------

void cmd_gen(const Options& o, std::ostream& out) {
  std::string text;
  auto families = gen::family_names();
  if (std::find(families.begin(), families.end(), o.target) != families.end()) {
    text = io::write_game(gen::family(o.target, parse_params(o.params)));
  } else if (is_tag(o.target)) {
    if (!o.params.empty()) throw Error(ErrorKind::parameter, "named instances take no parameters");
    auto named = gen::named(o.target);
    if (auto* g = std::get_if<NormalFormGame>(&named))
      text = io::write_game(*g);
    else
      text = io::write_tu(std::get<coop::TUGame>(named));
  } else if (o.target == "marriage3") {
    text = io::write_marriage(gen::named_marriage(o.target));
  } else if (o.target == "mortgage") {
    text = io::write_decision({gen::named_decision(o.target), {}});
  } else {
    throw Error(ErrorKind::parameter, "unknown family or instance: " + o.target);
  }
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::resource, o.out_path + ": cannot write file");
}

void cmd_sweep(const Options& o, std::ostream& out) {
  if (o.vary.empty() || o.from.empty() || o.to.empty())
    throw Error(ErrorKind::parameter, "sweep needs --vary, --from and --to");
  auto values = gen::parameter_range(parse_rational(o.from), parse_rational(o.to), parse_rational(o.by));
  auto result = gen::sweep(o.target, parse_params(o.params), o.vary, values, o.threads);
  auto set = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + std::string("(") + x + ")";
    return s;
  };
  if (table(o)) {
    out << "mode: pure\n";
    out << o.vary << "\toptimin\tnash\n";
    for (const auto& row : result.rows) out << to_string(row.parameter) << "\t" << set(row.optimin) << "\t" << set(row.nash) << "\n";
    out << "threshold: " << (result.threshold ? to_string(*result.threshold) : "none") << "\n";
  } else {
    json rows = json::array();
    for (const auto& row : result.rows) {
      json vals = json::array();
      for (const auto& v : row.values) vals.push_back(jvec(v));
      rows.push_back({{o.vary, jnum(row.parameter)}, {"optimin", row.optimin}, {"values", vals}, {"nash", row.nash}});
    }
    emit(out, json{{"mode", "pure"}, {"family", result.family}, {"parameter", result.parameter}, {"rows", rows},
                   {"threshold", result.threshold ? json(to_string(*result.threshold)) : json(nullptr)}});
  }
}

int cmd_selftest(const Options& o, std::ostream& out) {
  auto results = run_selftest(gen::named, o.threads);
  if (table(o)) {
    out << format_selftest(results);
  } else {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, json{{"checks", arr}});
  }
  bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"optimin: worst-case agreement solver", "optimin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--threads", o.threads, "worker threads (OPTIMIN_THREADS overrides)")->check(CLI::Range(1u, 256u));

  auto game_opt = [&](CLI::App* c) { c->add_option("--game", o.game, "named instance or file")->required(); };

  auto* optimin = app.add_subcommand("optimin", "optimin profiles of a normal-form game");
  game_opt(optimin);
  auto* pure = optimin->add_flag("--pure", o.pure, "pure profiles (default)");
  optimin->add_option("--mixed-grid", o.grid, "two-player mixed grid with resolution K")
      ->check(CLI::PositiveNumber)
      ->excludes(pure);

  auto* value = app.add_subcommand("value", "value of one profile");
  game_opt(value);
  auto* vprofile = value->add_option("--profile", o.profile, "pure profile, e.g. Top,Left");
  value->add_option("--mixed", o.mixed, "mixtures separated by ';', e.g. 1/2,1/2;1,0,0")->excludes(vprofile);

  auto* nash = app.add_subcommand("nash", "pure Nash equilibria");
  game_opt(nash);
  auto* maximin = app.add_subcommand("maximin", "pure maximin strategies");
  game_opt(maximin);

  auto* zerosum = app.add_subcommand("zerosum", "two-player zero-sum games");
  zerosum->require_subcommand(1);
  auto* zs_solve = zerosum->add_subcommand("solve", "maximin mixtures by LP");
  game_opt(zs_solve);
  auto* zs_check = zerosum->add_subcommand("check", "check that a mixed profile is a maximin pair");
  game_opt(zs_check);
  zs_check->add_option("--mixed", o.mixed, "mixtures separated by ';'")->required();

  auto* coop_cmd = app.add_subcommand("coop", "cooperative TU games");
  coop_cmd->require_subcommand(1);
  auto* c_opt = coop_cmd->add_subcommand("optimin", "grid optimin allocations");
  game_opt(c_opt);
  c_opt->add_option("--step", o.step, "lattice step");
  c_opt->add_option("--widen", o.widen, "lower individual rationality bounds by this amount");
  auto* c_core = coop_cmd->add_subcommand("core", "core emptiness and bounds");
  game_opt(c_core);
  auto* c_shapley = coop_cmd->add_subcommand("shapley", "Shapley value");
  game_opt(c_shapley);
  auto* c_nuc = coop_cmd->add_subcommand("nucleolus", "nucleolus");
  game_opt(c_nuc);
  auto* c_value = coop_cmd->add_subcommand("value", "worst-case value of an allocation");
  game_opt(c_value);
  c_value->add_option("--allocation", o.allocation, "comma-separated allocation")->required();

  auto* match = app.add_subcommand("match", "two-sided matching");
  game_opt(match);
  match->add_option("--matching", o.matching, "evaluate a matching, e.g. a1-b2,a2-b1,a3");

  auto* decide = app.add_subcommand("decide", "decision problem against Nature");
  game_opt(decide);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated or named instance");
  gen_cmd->add_option("name", o.target, "family or named instance")->required();
  gen_cmd->add_option("--param", o.params, "key=value family parameter");
  gen_cmd->add_option("--out", o.out_path, "output file");

  auto* sweep = app.add_subcommand("sweep", "optimin and Nash sets across a parameter range");
  sweep->add_option("family", o.target, "game family")->required();
  sweep->add_option("--param", o.params, "key=value fixed parameter");
  sweep->add_option("--vary", o.vary, "parameter to vary")->required();
  sweep->add_option("--from", o.from, "first value")->required();
  sweep->add_option("--to", o.to, "last value")->required();
  sweep->add_option("--step", o.by, "increment");

  auto* selftest = app.add_subcommand("selftest", "run the golden checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("OPTIMIN_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t < 1 || t > 256) throw std::out_of_range("threads");
      o.threads = static_cast<unsigned>(t);
    } catch (const std::exception&) {
      err << "error: OPTIMIN_THREADS must be an integer in 1..256\n";
      return 2;
    }
  }

  try {
    if (optimin->parsed()) cmd_optimin(o, out);
    else if (value->parsed()) cmd_value(o, out);
    else if (nash->parsed()) cmd_nash(o, out);
    else if (maximin->parsed()) cmd_maximin(o, out);
    else if (zs_solve->parsed()) cmd_zerosum_solve(o, out);
    else if (zs_check->parsed()) cmd_zerosum_check(o, out);
    else if (c_opt->parsed()) cmd_coop_optimin(o, out);
    else if (c_core->parsed()) cmd_coop_core(o, out);
    else if (c_shapley->parsed()) cmd_coop_vector(o, out, "shapley", coop::shapley(load_tu(o.game)));
    else if (c_nuc->parsed()) cmd_coop_vector(o, out, "nucleolus", coop::nucleolus(load_tu(o.game)));
    else if (c_value->parsed()) cmd_coop_value(o, out);
    else if (match->parsed()) cmd_match(o, out);
    else if (decide->parsed()) cmd_decide(o, out);
    else if (gen_cmd->parsed()) cmd_gen(o, out);
    else if (sweep->parsed()) cmd_sweep(o, out);
    else if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::parse:
      case ErrorKind::parameter:
        return 2;
      default:
        return 1;
    }
  }
  return 0;
}

}  // namespace optimin::cli
