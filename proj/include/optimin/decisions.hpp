#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "optimin/game.hpp"

namespace optimin::decisions {

/// Finite decision problem of a decision maker (acts) against Nature (states).
/// A pair (a, s) is feasible iff s is in feasible_states[a] and a is in
/// feasible_acts[s]; utilities are given exactly on feasible pairs.
class DecisionProblem {
 public:
  DecisionProblem(std::vector<std::string> acts, std::vector<std::string> states,
                  std::vector<std::vector<std::size_t>> feasible_states,
                  std::vector<std::vector<std::size_t>> feasible_acts,
                  std::vector<std::vector<std::optional<Rational>>> utility, bool antagonist = false);

  /// Everything feasible; utility[a][s] for all pairs.
  static DecisionProblem full(std::vector<std::string> acts, std::vector<std::string> states,
                              const std::vector<std::vector<Rational>>& utility, bool antagonist = false);

  const std::vector<std::string>& acts() const { return acts_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::size_t>& feasible_states(std::size_t act) const { return feasible_states_.at(act); }
  const std::vector<std::size_t>& feasible_acts(std::size_t state) const { return feasible_acts_.at(state); }
  bool feasible(std::size_t act, std::size_t state) const;
  bool antagonist() const { return antagonist_; }

  /// U_1(a, s). Throws domain error on infeasible pairs.
  const Rational& utility(std::size_t act, std::size_t state) const;
  const std::vector<std::vector<std::optional<Rational>>>& utility_table() const { return utility_; }

  std::optional<std::size_t> find_act(const std::string& label) const;
  std::optional<std::size_t> find_state(const std::string& label) const;

  bool operator==(const DecisionProblem&) const = default;

 private:
  std::vector<std::string> acts_, states_;
  std::vector<std::vector<std::size_t>> feasible_states_, feasible_acts_;
  std::vector<std::vector<std::optional<Rational>>> utility_;
  bool antagonist_ = false;
};

/// Sets deemed possible, looked up from most to least specific key:
/// (act, state), then act alone, then the wildcard. A missing entry means the
/// whole feasible set.
struct OptimismConstraint {
  struct Table {
    std::optional<std::vector<std::size_t>> wildcard;
    std::map<std::size_t, std::vector<std::size_t>> by_act;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_profile;
  };
  Table states;  // OC_2: Nature's states the decision maker deems possible
  Table acts;    // OC_1: decision maker's acts Nature deems possible

  /// Constant OC_2 = `states`.
  static OptimismConstraint constant(std::vector<std::size_t> states);
};

/// Resolved OC_2(a, s), sorted. Constraint error if empty or not within F_2(a).
std::vector<std::size_t> possible_states(const DecisionProblem& problem, const OptimismConstraint& oc,
                                         std::size_t act, std::size_t state);
/// Resolved OC_1(a, s), sorted. Constraint error if empty or not within F_1(s).
std::vector<std::size_t> possible_acts(const DecisionProblem& problem, const OptimismConstraint& oc,
                                       std::size_t act, std::size_t state);

/// (V_1) or, with an antagonistic Nature, (V_1, V_2) where U_2 = -U_1.
ValueVector decision_value(const DecisionProblem& problem, const OptimismConstraint& oc, std::size_t act,
                           std::size_t state);

struct ActProfile {
  std::size_t act = 0;
  std::size_t state = 0;
  ValueVector value;
};

struct DecisionOptimin {
  bool ranked_by_first_only = false;  // no utility for Nature: maximize V_1 alone
  std::vector<ActProfile> profiles;
};

DecisionOptimin optimin_acts(const DecisionProblem& problem, const OptimismConstraint& oc);

struct ReductionCheck {
  bool hypotheses_hold = false;
  std::string reason;
  bool agrees = false;  // meaningful only when the hypotheses hold
  std::vector<std::size_t> optimin_act_set;
  std::vector<std::size_t> maxmin_act_set;
};

/// With a constant OC_2 and no utility for Nature, optimin acts must be the
/// maximizers of the minimum utility over OC_2. Closedness and convexity of
/// OC_2 hold trivially for finite sets and are not checked.
ReductionCheck gilboa_reduction_check(const DecisionProblem& problem, const OptimismConstraint& oc);

}  // namespace optimin::decisions
