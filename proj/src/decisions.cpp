#include "optimin/decisions.hpp"

#include <algorithm>

#include "optimin/error.hpp"
#include "optimin/pareto.hpp"

namespace optimin::decisions {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<std::size_t> canonical(std::vector<std::size_t> v, std::size_t bound, const std::string& what) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw Error(ErrorKind::parameter, what + " must be nonempty");
  if (v.back() >= bound) throw Error(ErrorKind::parameter, what + " refers to an unknown index");
  return v;
}

std::vector<std::size_t> resolve(const OptimismConstraint::Table& table, std::size_t act, std::size_t state,
                                 const std::vector<std::size_t>& feasible, const std::string& what) {
  const std::vector<std::size_t>* chosen = &feasible;
  if (auto it = table.by_profile.find({act, state}); it != table.by_profile.end())
    chosen = &it->second;
  else if (auto jt = table.by_act.find(act); jt != table.by_act.end())
    chosen = &jt->second;
  else if (table.wildcard)
    chosen = &*table.wildcard;
  std::vector<std::size_t> out = *chosen;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorKind::constraint, what + " is empty");
  for (std::size_t x : out)
    if (!contains(feasible, x)) throw Error(ErrorKind::constraint, what + " leaves the feasible set");
  return out;
}

}  // namespace

DecisionProblem::DecisionProblem(std::vector<std::string> acts, std::vector<std::string> states,
                                 std::vector<std::vector<std::size_t>> feasible_states,
                                 std::vector<std::vector<std::size_t>> feasible_acts,
                                 std::vector<std::vector<std::optional<Rational>>> utility, bool antagonist)
    : acts_(std::move(acts)), states_(std::move(states)), utility_(std::move(utility)), antagonist_(antagonist) {
  if (acts_.empty() || states_.empty()) throw Error(ErrorKind::empty_input, "acts and states must be nonempty");
  if (feasible_states.size() != acts_.size() || feasible_acts.size() != states_.size())
    throw Error(ErrorKind::parameter, "one feasibility list per act and per state required");
  for (std::size_t a = 0; a < acts_.size(); ++a)
    feasible_states_.push_back(canonical(feasible_states[a], states_.size(), "feasible states of " + acts_[a]));
  for (std::size_t s = 0; s < states_.size(); ++s)
    feasible_acts_.push_back(canonical(feasible_acts[s], acts_.size(), "feasible acts of " + states_[s]));
  if (utility_.size() != acts_.size()) throw Error(ErrorKind::parameter, "utility table needs one row per act");
  for (std::size_t a = 0; a < acts_.size(); ++a) {
    if (utility_[a].size() != states_.size())
      throw Error(ErrorKind::parameter, "utility row of " + acts_[a] + " needs one entry per state");
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (feasible(a, s) != utility_[a][s].has_value())
        throw Error(ErrorKind::parameter, "utility must be given exactly on feasible pairs, see (" + acts_[a] + "," +
                                              states_[s] + ")");
    }
  }
}

DecisionProblem DecisionProblem::full(std::vector<std::string> acts, std::vector<std::string> states,
                                      const std::vector<std::vector<Rational>>& utility, bool antagonist) {
  std::vector<std::size_t> all_states(states.size()), all_acts(acts.size());
  for (std::size_t i = 0; i < all_states.size(); ++i) all_states[i] = i;
  for (std::size_t i = 0; i < all_acts.size(); ++i) all_acts[i] = i;
  std::vector<std::vector<std::optional<Rational>>> table;
  for (const auto& row : utility) table.emplace_back(row.begin(), row.end());
  std::size_t na = acts.size(), ns = states.size();
  return DecisionProblem(std::move(acts), std::move(states), std::vector(na, all_states), std::vector(ns, all_acts),
                         std::move(table), antagonist);
}

bool DecisionProblem::feasible(std::size_t act, std::size_t state) const {
  return act < acts_.size() && state < states_.size() && contains(feasible_states_[act], state) &&
         contains(feasible_acts_[state], act);
}

const Rational& DecisionProblem::utility(std::size_t act, std::size_t state) const {
  if (!feasible(act, state)) throw Error(ErrorKind::domain, "infeasible act/state pair");
  return *utility_[act][state];
}

std::optional<std::size_t> DecisionProblem::find_act(const std::string& label) const {
  auto it = std::find(acts_.begin(), acts_.end(), label);
  if (it == acts_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - acts_.begin());
}

std::optional<std::size_t> DecisionProblem::find_state(const std::string& label) const {
  auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

OptimismConstraint OptimismConstraint::constant(std::vector<std::size_t> states) {
  OptimismConstraint oc;
  oc.states.wildcard = std::move(states);
  return oc;
}

std::vector<std::size_t> possible_states(const DecisionProblem& problem, const OptimismConstraint& oc,
                                         std::size_t act, std::size_t state) {
  return resolve(oc.states, act, state, problem.feasible_states(act), "OC_2(" + problem.acts().at(act) + ")");
}

std::vector<std::size_t> possible_acts(const DecisionProblem& problem, const OptimismConstraint& oc,
                                       std::size_t act, std::size_t state) {
  return resolve(oc.acts, act, state, problem.feasible_acts(state), "OC_1(" + problem.states().at(state) + ")");
}

ValueVector decision_value(const DecisionProblem& problem, const OptimismConstraint& oc, std::size_t act,
                           std::size_t state) {
  if (!problem.feasible(act, state)) throw Error(ErrorKind::domain, "infeasible act/state profile");
  ValueVector out;
  auto states = possible_states(problem, oc, act, state);
  Rational v1 = problem.utility(act, states.front());
  for (std::size_t s : states) v1 = std::min(v1, problem.utility(act, s));
  out.push_back(v1);
  if (problem.antagonist()) {
    auto acts = possible_acts(problem, oc, act, state);
    Rational v2 = -problem.utility(acts.front(), state);
    for (std::size_t a : acts) v2 = std::min(v2, Rational(-problem.utility(a, state)));
    out.push_back(v2);
  }
  return out;
}

DecisionOptimin optimin_acts(const DecisionProblem& problem, const OptimismConstraint& oc) {
  std::vector<ActProfile> all;
  for (std::size_t a = 0; a < problem.acts().size(); ++a)
    for (std::size_t s : problem.feasible_states(a))
      if (problem.feasible(a, s)) all.push_back({a, s, decision_value(problem, oc, a, s)});
  if (all.empty()) throw Error(ErrorKind::empty_input, "no feasible act/state profile");
  DecisionOptimin result;
  result.ranked_by_first_only = !problem.antagonist();
  result.profiles = pareto_filter(all, [](const ActProfile& p) { return p.value; });
  return result;
}

ReductionCheck gilboa_reduction_check(const DecisionProblem& problem, const OptimismConstraint& oc) {
  ReductionCheck check;
  if (problem.antagonist()) {
    check.reason = "Nature has a utility, so values are not compared by V_1 alone";
    return check;
  }
  std::optional<std::vector<std::size_t>> common;
  for (std::size_t a = 0; a < problem.acts().size(); ++a) {
    for (std::size_t s : problem.feasible_states(a)) {
      if (!problem.feasible(a, s)) continue;
      auto states = possible_states(problem, oc, a, s);
      if (!common)
        common = states;
      else if (*common != states) {
        check.reason = "OC_2 is not constant across profiles";
        return check;
      }
    }
  }
  if (!common) {
    check.reason = "no feasible profile";
    return check;
  }
  check.hypotheses_hold = true;
  check.reason = "OC_2 constant and Nature has no utility";

  for (const auto& p : optimin_acts(problem, oc).profiles)
    if (!contains(check.optimin_act_set, p.act)) check.optimin_act_set.push_back(p.act);
  std::sort(check.optimin_act_set.begin(), check.optimin_act_set.end());

  std::optional<Rational> best;
  for (std::size_t a = 0; a < problem.acts().size(); ++a) {
    bool usable = std::any_of(problem.feasible_states(a).begin(), problem.feasible_states(a).end(),
                              [&](std::size_t s) { return problem.feasible(a, s); });
    if (!usable) continue;
    Rational worst = problem.utility(a, common->front());
    for (std::size_t s : *common) worst = std::min(worst, problem.utility(a, s));
    if (!best || worst > *best) {
      best = worst;
      check.maxmin_act_set.clear();
    }
    if (worst == *best) check.maxmin_act_set.push_back(a);
  }
  check.agrees = check.optimin_act_set == check.maxmin_act_set;
  return check;
}

}  // namespace optimin::decisions
