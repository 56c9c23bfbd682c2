#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace optimin::matching {

enum class Side { A, B };

/// Two-sided marriage problem with n individuals per side. Individuals are
/// numbered 0..n-1 on side A and n..2n-1 on side B. Each ranking lists every
/// member of the other side plus the individual itself, best first; partners
/// ranked below self are unacceptable.
class MarriageProblem {
 public:
  MarriageProblem(std::vector<std::string> side_a, std::vector<std::string> side_b,
                  std::vector<std::vector<std::size_t>> rankings);

  std::size_t side_size() const { return side_a_.size(); }
  std::size_t population() const { return 2 * side_a_.size(); }
  bool on_side_a(std::size_t i) const { return i < side_size(); }
  const std::string& label(std::size_t i) const;
  std::optional<std::size_t> find(const std::string& label) const;
  const std::vector<std::string>& side_a() const { return side_a_; }
  const std::vector<std::string>& side_b() const { return side_b_; }
  const std::vector<std::size_t>& ranking(std::size_t i) const { return rankings_.at(i); }

  /// Position of j in i's ranking (0 = best). j must be i or on the other side.
  std::size_t rank(std::size_t i, std::size_t j) const { return rank_[i][j]; }
  bool prefers(std::size_t i, std::size_t j, std::size_t k) const { return rank(i, j) < rank(i, k); }
  bool acceptable(std::size_t i, std::size_t j) const { return rank(i, j) < rank(i, i); }

 private:
  std::vector<std::string> side_a_, side_b_;
  std::vector<std::vector<std::size_t>> rankings_;
  std::vector<std::vector<std::size_t>> rank_;
};

/// partner[i] == i means single.
struct Matching {
  std::vector<std::size_t> partner;

  static Matching all_single(std::size_t population);
  bool operator==(const Matching&) const = default;
};

void validate(const MarriageProblem& problem, const Matching& m);
std::string to_string(const MarriageProblem& problem, const Matching& m);

Matching deferred_acceptance(const MarriageProblem& problem, Side proposing = Side::A);

struct StabilityReport {
  bool stable = true;
  std::optional<std::size_t> unhappy;                          // prefers being single
  std::optional<std::pair<std::size_t, std::size_t>> blocking;  // (a, b)
};

/// Individual rationality first (by index), then blocking pairs in (a, b) order.
StabilityReport is_stable(const MarriageProblem& problem, const Matching& m);

/// A group with an internal re-matching in which every member strictly improves.
struct GroupDeviation {
  std::vector<std::size_t> members;                          // ascending
  std::vector<std::pair<std::size_t, std::size_t>> rematch;  // (member, new partner or itself)
};

/// Every profitable group deviation. Side size <= 6.
std::vector<GroupDeviation> profitable_group_deviations(const MarriageProblem& problem, const Matching& m);

/// Per individual: the worst outcome among the matching itself and every
/// profitable deviation. An individual abandoned by a deviating partner is single.
struct MatchOutcomeValue {
  std::vector<std::size_t> worst;
};

MatchOutcomeValue matching_value(const MarriageProblem& problem, const Matching& m);

/// All matchings of the problem, in a fixed canonical order. Side size <= 5.
std::vector<Matching> all_matchings(const MarriageProblem& problem);

/// Matchings whose values are Pareto optimal under each individual's own ranking.
std::vector<Matching> optimin_matchings(const MarriageProblem& problem);

}  // namespace optimin::matching
