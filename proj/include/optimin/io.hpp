#pragma once

#include <string>

#include "optimin/coop.hpp"
#include "optimin/decisions.hpp"
#include "optimin/game.hpp"
#include "optimin/matching.hpp"

namespace optimin::io {

/// {"players": [...], "strategies": [[...], ...], "payoffs": nested by strategy
/// index, innermost = one payoff per player}. Rationals are integers or "a/b".
NormalFormGame parse_game(const std::string& text);
std::string write_game(const NormalFormGame& game);

/// {"n": 3, "worth": {"1": 35, ..., "1,2,3": 110}}; every coalition required.
coop::TUGame parse_tu(const std::string& text);
std::string write_tu(const coop::TUGame& game);

/// {"A": [...], "B": [...], "prefs": {"a1": ["b2", "a1"], ...}}. Partners left
/// out of a list rank below self, in the order the other side is declared.
matching::MarriageProblem parse_marriage(const std::string& text);
std::string write_marriage(const matching::MarriageProblem& problem);

struct DecisionFile {
  decisions::DecisionProblem problem;
  decisions::OptimismConstraint oc;
};

/// {"acts", "states", "utility": rows per act with null on infeasible pairs,
/// optional "feasible_states" {act: [states]}, "feasible_acts" {state: [acts]},
/// "antagonist", and "oc" / "oc_nature" keyed by "*", "act,*" or "act,state"}.
DecisionFile parse_decision(const std::string& text);
std::string write_decision(const DecisionFile& file);

enum class FileKind { game, tu, marriage, decision };
FileKind detect(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace optimin::io
