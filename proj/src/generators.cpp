#include "optimin/generators.hpp"

#include <algorithm>

#include "optimin/error.hpp"
#include "optimin/noncoop.hpp"
#include "optimin/parallel.hpp"
#include "optimin/zerosum.hpp"

namespace optimin::gen {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

std::vector<std::vector<std::pair<Rational, Rational>>> cells(
    std::initializer_list<std::initializer_list<std::pair<long, long>>> rows) {
  std::vector<std::vector<std::pair<Rational, Rational>>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const auto& [a, b] : row) out.back().push_back({q(a), q(b)});
  }
  return out;
}

coop::TUGame three_player(long u1, long u2, long u3, long u12, long u13, long u23, long u123) {
  std::vector<Rational> w(8);
  w[0b001] = u1;
  w[0b010] = u2;
  w[0b100] = u3;
  w[0b011] = u12;
  w[0b101] = u13;
  w[0b110] = u23;
  w[0b111] = u123;
  return coop::TUGame(3, std::move(w));
}

std::string param(const Params& params, const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

long param_long(const Params& params, const std::string& key, long fallback) {
  Rational r = parse_rational(param(params, key, std::to_string(fallback)));
  if (!is_integer(r)) throw Error(ErrorKind::parameter, key + " must be an integer");
  return r.get_num().get_si();
}

}  // namespace

NormalFormGame travelers(long min, long max, const Rational& r) {
  if (min < 2 || min >= max) throw Error(ErrorKind::parameter, "travelers needs 2 <= min < max");
  if (r <= 1) throw Error(ErrorKind::parameter, "travelers needs r > 1");
  std::vector<std::string> labels;
  for (long k = min; k <= max; ++k) labels.push_back(std::to_string(k));
  std::vector<std::vector<std::pair<Rational, Rational>>> table;
  for (long a = min; a <= max; ++a) {
    table.emplace_back();
    for (long b = min; b <= max; ++b) {
      if (a == b)
        table.back().push_back({q(a), q(b)});
      else if (a < b)
        table.back().push_back({a + r, a - r});
      else
        table.back().push_back({b - r, b + r});
    }
  }
  return NormalFormGame::bimatrix(labels, labels, table);
}

NormalFormGame centipede(unsigned nodes, CentipedeVariant variant) {
  if (nodes < 1) throw Error(ErrorKind::parameter, "centipede needs at least one node");
  const unsigned t_max = nodes;
  auto outcome = [&](unsigned node) {
    // Payoffs (player 1, player 2) when play ends at `node`.
    bool first_stops = node % 2 == 1;
    Rational stopper, other;
    if (variant == CentipedeVariant::increasing) {
      mpz_class base;
      mpz_ui_pow_ui(base.get_mpz_t(), 2, node - 1);
      stopper = 4 * Rational(base);
      other = Rational(base);
    } else {
      stopper = t_max + 1 + node;
      other = Rational(t_max + 1) - node;
    }
    return first_stops ? std::make_pair(stopper, other) : std::make_pair(other, stopper);
  };
  const unsigned own1 = (nodes + 1) / 2, own2 = nodes / 2;
  auto labels = [](unsigned own) {
    std::vector<std::string> out;
    for (unsigned k = 1; k <= own; ++k) out.push_back("stop" + std::to_string(k));
    out.push_back("continue");
    return out;
  };
  std::vector<std::vector<std::pair<Rational, Rational>>> table;
  for (unsigned a = 0; a <= own1; ++a) {
    table.emplace_back();
    for (unsigned b = 0; b <= own2; ++b) {
      unsigned end1 = a < own1 ? 2 * a + 1 : nodes + 1;
      unsigned end2 = b < own2 ? 2 * b + 2 : nodes + 1;
      table.back().push_back(outcome(std::min(end1, end2)));
    }
  }
  return NormalFormGame::bimatrix(labels(own1), labels(own2), table);
}

NormalFormGame prisoners_dilemma(const Rational& t, const Rational& r, const Rational& p, const Rational& s) {
  if (!(t > r && r > p && p > s)) throw Error(ErrorKind::parameter, "prisoners dilemma needs T > R > P > S");
  return NormalFormGame::bimatrix({"Cooperate", "Defect"}, {"Cooperate", "Defect"},
                                  {{{r, r}, {s, t}}, {{t, s}, {p, p}}});
}

NormalFormGame public_goods(std::size_t n, const Rational& e, const Rational& m, std::vector<Rational> levels) {
  if (n < 2) throw Error(ErrorKind::parameter, "public goods needs at least 2 players");
  if (e <= 0 || m <= 0) throw Error(ErrorKind::parameter, "public goods needs e > 0 and m > 0");
  if (levels.size() < 2) throw Error(ErrorKind::parameter, "public goods needs at least 2 contribution levels");
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end())
    throw Error(ErrorKind::parameter, "contribution levels must be distinct");
  if (levels.front() < 0 || levels.back() > e) throw Error(ErrorKind::parameter, "contribution levels must lie in [0, e]");

  std::vector<std::string> players, labels;
  for (std::size_t i = 0; i < n; ++i) players.push_back(std::to_string(i + 1));
  for (const auto& c : levels) labels.push_back(to_string(c));
  std::vector<std::vector<std::string>> strategies(n, labels);

  std::size_t cells_count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (cells_count > 10'000'000 / levels.size()) throw Error(ErrorKind::resource, "public goods game too large");
    cells_count *= levels.size();
  }
  std::vector<Rational> payoffs;
  payoffs.reserve(cells_count * n);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t cell = 0; cell < cells_count; ++cell) {
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) total += levels[idx[i]];
    for (std::size_t i = 0; i < n; ++i) payoffs.push_back(e - levels[idx[i]] + m * total);
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < levels.size()) break;
      idx[i] = 0;
    }
  }
  return NormalFormGame(players, strategies, std::move(payoffs));
}

Named named(const std::string& tag) {
  if (tag == "figure1")
    return NormalFormGame::bimatrix({"Top", "Middle", "Bottom"}, {"Left", "Center", "Right"},
                                    cells({{{100, 100}, {100, 105}, {0, 0}},
                                           {{105, 100}, {95, 95}, {0, 210}},
                                           {{0, 0}, {210, 0}, {5, 5}}}));
  if (tag == "motivating")
    return NormalFormGame::bimatrix({"U", "D"}, {"L", "R"}, cells({{{2, 2}, {0, 1}}, {{1, 2}, {1, 1}}}));
  if (tag == "battle_of_sexes")
    return NormalFormGame::bimatrix({"Football", "Opera"}, {"Football", "Opera"},
                                    cells({{{2, 1}, {0, 0}}, {{0, 0}, {1, 2}}}));
  if (tag == "matching_pennies")
    return NormalFormGame::bimatrix({"Heads", "Tails"}, {"Heads", "Tails"},
                                    cells({{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}}));
  if (tag == "prisoners_dilemma") return prisoners_dilemma(5, 3, 1, 0);
  if (tag == "bulmer") return bulmer_game().game();
  if (tag == "coop_empty_core") return three_player(35, 30, 25, 90, 80, 70, 110);
  if (tag == "coop_120") return three_player(35, 30, 25, 90, 80, 70, 120);
  throw Error(ErrorKind::parameter, "unknown instance tag: " + tag);
}

std::vector<std::string> named_tags() {
  return {"figure1",         "motivating", "battle_of_sexes", "matching_pennies",
          "prisoners_dilemma", "bulmer",   "coop_empty_core", "coop_120"};
}

decisions::DecisionProblem named_decision(const std::string& tag) {
  if (tag == "mortgage")
    return decisions::DecisionProblem::full({"buy", "rent"}, {"boom", "bust"}, {{q(10), q(-5)}, {q(2), q(2)}});
  throw Error(ErrorKind::parameter, "unknown decision tag: " + tag);
}

matching::MarriageProblem named_marriage(const std::string& tag) {
  if (tag == "marriage3") {
    // a1 a2 a3 = 0 1 2, b1 b2 b3 = 3 4 5
    return matching::MarriageProblem({"a1", "a2", "a3"}, {"b1", "b2", "b3"},
                                     {{3, 4, 5, 0}, {4, 3, 5, 1}, {3, 4, 5, 2},
                                      {1, 0, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}});
  }
  throw Error(ErrorKind::parameter, "unknown marriage tag: " + tag);
}

NormalFormGame family(const std::string& name, const Params& params) {
  if (name == "travelers")
    return travelers(param_long(params, "min", 2), param_long(params, "max", 100),
                     parse_rational(param(params, "r", "2")));
  if (name == "centipede") {
    long nodes = param_long(params, "nodes", 4);
    if (nodes < 1 || nodes > 64) throw Error(ErrorKind::parameter, "centipede nodes must be in 1..64");
    std::string v = param(params, "variant", "increasing");
    if (v != "increasing" && v != "constant") throw Error(ErrorKind::parameter, "centipede variant: " + v);
    return centipede(static_cast<unsigned>(nodes),
                     v == "increasing" ? CentipedeVariant::increasing : CentipedeVariant::constant);
  }
  if (name == "prisoners_dilemma")
    return prisoners_dilemma(parse_rational(param(params, "T", "5")), parse_rational(param(params, "R", "3")),
                             parse_rational(param(params, "P", "1")), parse_rational(param(params, "S", "0")));
  if (name == "public_goods") {
    long n = param_long(params, "n", 2);
    long k = param_long(params, "levels", 2);
    if (n < 2 || n > 8) throw Error(ErrorKind::parameter, "public goods n must be in 2..8");
    if (k < 2 || k > 101) throw Error(ErrorKind::parameter, "public goods levels must be in 2..101");
    Rational e = parse_rational(param(params, "e", "10"));
    std::vector<Rational> levels;
    for (long j = 0; j < k; ++j) levels.push_back(e * j / (k - 1));
    return public_goods(static_cast<std::size_t>(n), e, parse_rational(param(params, "m", "2/5")), levels);
  }
  throw Error(ErrorKind::parameter, "unknown family: " + name);
}

std::vector<std::string> family_names() { return {"travelers", "centipede", "prisoners_dilemma", "public_goods"}; }

std::vector<Rational> parameter_range(const Rational& from, const Rational& to, const Rational& step) {
  if (step <= 0) throw Error(ErrorKind::parameter, "sweep step must be positive");
  if (to < from) throw Error(ErrorKind::parameter, "sweep range is empty");
  std::vector<Rational> out;
  for (Rational v = from; v <= to; v += step) {
    if (out.size() >= 100000) throw Error(ErrorKind::resource, "sweep range too long");
    out.push_back(v);
  }
  return out;
}

SweepResult sweep(const std::string& family_name, const Params& params, const std::string& parameter,
                  const std::vector<Rational>& values, unsigned threads) {
  if (values.empty()) throw Error(ErrorKind::parameter, "sweep needs at least one parameter value");
  SweepResult result;
  result.family = family_name;
  result.parameter = parameter;
  result.rows.resize(values.size());
  parallel_for(values.size(), threads, [&](std::size_t k) {
    Params p = params;
    p[parameter] = to_string(values[k]);
    NormalFormGame game = family(family_name, p);
    SweepRow& row = result.rows[k];
    row.parameter = values[k];
    for (const auto& ev : optimin_pure(game)) {
      row.optimin.push_back(game.profile_label(ev.profile));
      row.values.push_back(ev.value);
    }
    for (const auto& prof : nash_pure(game)) row.nash.push_back(game.profile_label(prof));
  });
  const auto& start = result.rows.front().optimin;
  for (const auto& row : result.rows) {
    bool any = std::any_of(start.begin(), start.end(), [&](const std::string& label) {
      return std::find(row.optimin.begin(), row.optimin.end(), label) != row.optimin.end();
    });
    if (!any) {
      result.threshold = row.parameter;
      break;
    }
  }
  return result;
}

}  // namespace optimin::gen
