#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "optimin/rational.hpp"

namespace optimin::lp {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { minimize, maximize };
enum class Status { optimal, infeasible, unbounded };

const char* to_string(Status status);

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// Missing bound = unbounded on that side. Variables default to [0, +inf).
struct Bounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_variables);

  std::size_t num_variables() const { return bounds_.size(); }

  void set_objective(Sense sense, std::vector<Rational> coefficients);
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  void set_bounds(std::size_t variable, std::optional<Rational> lower, std::optional<Rational> upper);
  void set_free(std::size_t variable) { set_bounds(variable, std::nullopt, std::nullopt); }

  Sense sense() const { return sense_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Bounds>& bounds() const { return bounds_; }

  /// Exact check of every constraint and bound.
  bool is_feasible(const std::vector<Rational>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  Sense sense_ = Sense::minimize;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
  std::vector<Bounds> bounds_;
};

struct Solution {
  Status status = Status::infeasible;
  std::vector<Rational> point;  // empty unless optimal
  Rational objective;           // meaningful only when optimal
};

/// Two-phase primal simplex over exact rationals with Bland's rule. Ties in
/// the ratio test go to the lowest variable index, so results are reproducible.
Solution solve_lp(const LinearProgram& program);

}  // namespace optimin::lp
