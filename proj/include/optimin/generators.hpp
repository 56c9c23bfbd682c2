#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "optimin/coop.hpp"
#include "optimin/decisions.hpp"
#include "optimin/game.hpp"
#include "optimin/matching.hpp"

namespace optimin::gen {

/// Claims min..max; the lower claim a earns a + r and the higher earns a - r.
NormalFormGame travelers(long min, long max, const Rational& r);

enum class CentipedeVariant { increasing, constant };

/// Reduced normal form of an alternating centipede with `nodes` decision
/// nodes, player 1 moving first. Strategies are "stopK" (stop at one's own
/// K-th node) and "continue". Stopping at node t pays the stopper 4*2^(t-1)
/// and the other 2^(t-1) in the increasing variant, and T+1+t versus T+1-t in
/// the constant variant (T = nodes). Reaching the end counts as node T+1.
NormalFormGame centipede(unsigned nodes, CentipedeVariant variant);

/// Cooperate/Defect with T > R > P > S.
NormalFormGame prisoners_dilemma(const Rational& t, const Rational& r, const Rational& p, const Rational& s);

/// Contribution levels must lie in [0, e]; payoff e - c_i + m * sum c_j.
NormalFormGame public_goods(std::size_t n, const Rational& e, const Rational& m, std::vector<Rational> levels);

using Named = std::variant<NormalFormGame, coop::TUGame>;

/// figure1, motivating, battle_of_sexes, matching_pennies, prisoners_dilemma,
/// bulmer, coop_empty_core, coop_120.
Named named(const std::string& tag);
std::vector<std::string> named_tags();

/// Small decision problem: "mortgage".
decisions::DecisionProblem named_decision(const std::string& tag);
/// Small marriage problem: "marriage3".
matching::MarriageProblem named_marriage(const std::string& tag);

/// Family parameters as text, e.g. {"r", "5/2"}; missing keys take defaults.
using Params = std::map<std::string, std::string>;

/// travelers (min, max, r), centipede (nodes, variant), prisoners_dilemma
/// (T, R, P, S), public_goods (n, e, m, levels = number of evenly spaced levels).
NormalFormGame family(const std::string& name, const Params& params);
std::vector<std::string> family_names();

struct SweepRow {
  Rational parameter;
  std::vector<std::string> optimin;  // profile labels
  std::vector<ValueVector> values;   // value of each optimin profile
  std::vector<std::string> nash;
};

struct SweepResult {
  std::string family;
  std::string parameter;
  std::vector<SweepRow> rows;
  /// First parameter value at which none of the first row's optimin profiles remain optimin.
  std::optional<Rational> threshold;
};

SweepResult sweep(const std::string& family_name, const Params& params, const std::string& parameter,
                  const std::vector<Rational>& values, unsigned threads = 1);

/// from, from + step, ... up to and including `to`.
std::vector<Rational> parameter_range(const Rational& from, const Rational& to, const Rational& step);

}  // namespace optimin::gen
