#include "optimin/matching.hpp"

#include <algorithm>

#include "optimin/error.hpp"
#include "optimin/pareto.hpp"

namespace optimin::matching {

MarriageProblem::MarriageProblem(std::vector<std::string> side_a, std::vector<std::string> side_b,
                                 std::vector<std::vector<std::size_t>> rankings)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)), rankings_(std::move(rankings)) {
  if (side_a_.size() != side_b_.size()) throw Error(ErrorKind::parameter, "both sides must have the same size");
  const std::size_t n = side_a_.size();
  if (rankings_.size() != 2 * n) throw Error(ErrorKind::parameter, "one ranking per individual required");
  rank_.assign(2 * n, std::vector<std::size_t>(2 * n, 2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    const auto& r = rankings_[i];
    if (r.size() != n + 1)
      throw Error(ErrorKind::parameter, "ranking of " + label(i) + " must list the other side plus self");
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      std::size_t j = r[pos];
      bool valid = j < 2 * n && (j == i || on_side_a(i) != on_side_a(j));
      if (!valid) throw Error(ErrorKind::parameter, "ranking of " + label(i) + " names an invalid individual");
      if (rank_[i][j] != 2 * n) throw Error(ErrorKind::parameter, "ranking of " + label(i) + " repeats an entry");
      rank_[i][j] = pos;
    }
  }
}

const std::string& MarriageProblem::label(std::size_t i) const {
  return i < side_a_.size() ? side_a_.at(i) : side_b_.at(i - side_a_.size());
}

std::optional<std::size_t> MarriageProblem::find(const std::string& name) const {
  for (std::size_t i = 0; i < population(); ++i)
    if (label(i) == name) return i;
  return std::nullopt;
}

Matching Matching::all_single(std::size_t population) {
  Matching m;
  m.partner.resize(population);
  for (std::size_t i = 0; i < population; ++i) m.partner[i] = i;
  return m;
}

void validate(const MarriageProblem& problem, const Matching& m) {
  if (m.partner.size() != problem.population()) throw Error(ErrorKind::parameter, "matching size mismatch");
  for (std::size_t i = 0; i < m.partner.size(); ++i) {
    std::size_t j = m.partner[i];
    if (j >= m.partner.size()) throw Error(ErrorKind::parameter, "partner out of range");
    if (j != i && (problem.on_side_a(i) == problem.on_side_a(j) || m.partner[j] != i))
      throw Error(ErrorKind::parameter, "matching is not a valid pairing at " + problem.label(i));
  }
}

std::string to_string(const MarriageProblem& problem, const Matching& m) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ",";
    out += s;
  };
  for (std::size_t a = 0; a < problem.side_size(); ++a) {
    if (m.partner[a] != a)
      add(problem.label(a) + "-" + problem.label(m.partner[a]));
    else
      add(problem.label(a));
  }
  for (std::size_t b = problem.side_size(); b < problem.population(); ++b)
    if (m.partner[b] == b) add(problem.label(b));
  return out;
}

Matching deferred_acceptance(const MarriageProblem& problem, Side proposing) {
  const std::size_t n = problem.side_size();
  const std::size_t offset = proposing == Side::A ? 0 : n;
  Matching m = Matching::all_single(problem.population());
  std::vector<std::size_t> next(2 * n, 0);  // next position in the proposer's ranking
  std::vector<std::size_t> free;
  for (std::size_t k = n; k-- > 0;) free.push_back(offset + k);

  while (!free.empty()) {
    std::size_t p = free.back();
    const auto& ranking = problem.ranking(p);
    std::size_t target = ranking[next[p]++];
    if (target == p) {  // every acceptable partner has rejected p
      free.pop_back();
      continue;
    }
    if (!problem.acceptable(target, p)) continue;
    std::size_t held = m.partner[target];
    if (held == target) {
      m.partner[target] = p;
      m.partner[p] = target;
      free.pop_back();
    } else if (problem.prefers(target, p, held)) {
      m.partner[held] = held;
      m.partner[target] = p;
      m.partner[p] = target;
      free.back() = held;
    }
  }
  return m;
}

StabilityReport is_stable(const MarriageProblem& problem, const Matching& m) {
  validate(problem, m);
  StabilityReport report;
  for (std::size_t i = 0; i < problem.population(); ++i) {
    if (problem.prefers(i, i, m.partner[i])) {
      report.stable = false;
      report.unhappy = i;
      return report;
    }
  }
  const std::size_t n = problem.side_size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = n; b < 2 * n; ++b) {
      if (m.partner[a] == b) continue;
      if (problem.prefers(a, b, m.partner[a]) && problem.prefers(b, a, m.partner[b])) {
        report.stable = false;
        report.blocking = std::make_pair(a, b);
        return report;
      }
    }
  }
  return report;
}

std::vector<GroupDeviation> profitable_group_deviations(const MarriageProblem& problem, const Matching& m) {
  validate(problem, m);
  if (problem.side_size() > 6) throw Error(ErrorKind::resource, "group deviations limited to 6 per side");
  const std::size_t pop = problem.population();
  std::vector<GroupDeviation> out;

  for (std::size_t mask = 1; mask < (std::size_t{1} << pop); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pop; ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    std::vector<std::size_t> assigned(pop, pop);
    auto improves = [&](std::size_t i, std::size_t j) { return problem.prefers(i, j, m.partner[i]); };

    auto recurse = [&](auto&& self, std::size_t k) -> void {
      while (k < members.size() && assigned[members[k]] != pop) ++k;
      if (k == members.size()) {
        GroupDeviation d;
        d.members = members;
        for (std::size_t i : members) d.rematch.push_back({i, assigned[i]});
        out.push_back(std::move(d));
        return;
      }
      std::size_t i = members[k];
      if (improves(i, i)) {
        assigned[i] = i;
        self(self, k + 1);
        assigned[i] = pop;
      }
      for (std::size_t t = k + 1; t < members.size(); ++t) {
        std::size_t j = members[t];
        if (assigned[j] != pop || problem.on_side_a(i) == problem.on_side_a(j)) continue;
        if (!improves(i, j) || !improves(j, i)) continue;
        assigned[i] = j;
        assigned[j] = i;
        self(self, k + 1);
        assigned[i] = pop;
        assigned[j] = pop;
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

MatchOutcomeValue matching_value(const MarriageProblem& problem, const Matching& m) {
  validate(problem, m);
  const std::size_t pop = problem.population();
  // j can join some profitable deviation that leaves out its partner exactly
  // when j prefers being single or j has a blocking partner: any larger
  // deviation containing j already contains the pair {j, new partner}.
  std::vector<bool> can_leave(pop, false);
  for (std::size_t j = 0; j < pop; ++j) {
    if (problem.prefers(j, j, m.partner[j])) {
      can_leave[j] = true;
      continue;
    }
    for (std::size_t k = 0; k < pop; ++k) {
      if (problem.on_side_a(k) == problem.on_side_a(j)) continue;
      if (problem.prefers(j, k, m.partner[j]) && problem.prefers(k, j, m.partner[k])) {
        can_leave[j] = true;
        break;
      }
    }
  }
  MatchOutcomeValue value;
  value.worst.resize(pop);
  for (std::size_t i = 0; i < pop; ++i) {
    std::size_t p = m.partner[i];
    bool abandoned = p != i && can_leave[p];
    value.worst[i] = abandoned && problem.prefers(i, p, i) ? i : p;
  }
  return value;
}

std::vector<Matching> all_matchings(const MarriageProblem& problem) {
  if (problem.side_size() > 5) throw Error(ErrorKind::resource, "matching enumeration limited to 5 per side");
  const std::size_t n = problem.side_size();
  std::vector<Matching> out;
  Matching m = Matching::all_single(problem.population());
  auto recurse = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      out.push_back(m);
      return;
    }
    self(self, a + 1);
    for (std::size_t b = n; b < 2 * n; ++b) {
      if (m.partner[b] != b) continue;
      m.partner[a] = b;
      m.partner[b] = a;
      self(self, a + 1);
      m.partner[a] = a;
      m.partner[b] = b;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Matching> optimin_matchings(const MarriageProblem& problem) {
  auto matchings = all_matchings(problem);
  // Ordinal values as negated ranks so that larger is better.
  return pareto_filter(matchings, [&](const Matching& m) {
    auto v = matching_value(problem, m);
    ValueVector out;
    for (std::size_t i = 0; i < v.worst.size(); ++i)
      out.push_back(Rational(-static_cast<long>(problem.rank(i, v.worst[i]))));
    return out;
  });
}

}  // namespace optimin::matching
