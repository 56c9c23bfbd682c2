#include "optimin/lp.hpp"

#include <stdexcept>

#include "optimin/error.hpp"

namespace optimin::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

LinearProgram::LinearProgram(std::size_t num_variables)
    : objective_(num_variables, Rational(0)), bounds_(num_variables) {
  if (num_variables == 0) throw Error(ErrorKind::parameter, "a linear program needs at least one variable");
}

void LinearProgram::set_objective(Sense sense, std::vector<Rational> coefficients) {
  if (coefficients.size() != num_variables()) throw Error(ErrorKind::parameter, "objective length mismatch");
  sense_ = sense;
  objective_ = std::move(coefficients);
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != num_variables()) throw Error(ErrorKind::parameter, "constraint length mismatch");
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_bounds(std::size_t variable, std::optional<Rational> lower, std::optional<Rational> upper) {
  bounds_.at(variable) = Bounds{std::move(lower), std::move(upper)};
}

bool LinearProgram::is_feasible(const std::vector<Rational>& point) const {
  if (point.size() != num_variables()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (bounds_[j].lower && point[j] < *bounds_[j].lower) return false;
    if (bounds_[j].upper && point[j] > *bounds_[j].upper) return false;
  }
  for (const auto& c : constraints_) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coefficients[j] * point[j];
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational LinearProgram::evaluate(const std::vector<Rational>& point) const {
  Rational v = 0;
  for (std::size_t j = 0; j < point.size(); ++j) v += objective_[j] * point[j];
  return v;
}

namespace {

// x_j = offset + sum(terms) over nonnegative standard-form columns.
struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, Rational>> terms;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * (cols + 1), Rational(0)), basis_(rows) {}

  std::size_t rows() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return cells_[r * (cols_ + 1) + cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col, std::vector<Rational>& cost_row, Rational& cost_value) {
    Rational inv = 1 / at(row, col);
    for (std::size_t c = 0; c <= cols_; ++c) cells_[row * (cols_ + 1) + c] *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row) continue;
      Rational factor = at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        const Rational& pv = cells_[row * (cols_ + 1) + c];
        if (pv != 0) cells_[r * (cols_ + 1) + c] -= factor * pv;
      }
    }
    Rational factor = cost_row[col];
    if (factor != 0) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const Rational& pv = cells_[row * (cols_ + 1) + c];
        if (pv != 0) cost_row[c] -= factor * pv;
      }
      cost_value -= factor * rhs(row);
    }
    basis_[row] = col;
  }

  void remove_row(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row * (cols_ + 1)),
                 cells_.begin() + static_cast<std::ptrdiff_t>((row + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

// Reduced costs for minimizing `costs` with the current basis. The returned
// value tracks -(objective) so that pivots can update it uniformly.
void price(Tableau& t, const std::vector<Rational>& costs, std::vector<Rational>& reduced, Rational& value) {
  reduced = costs;
  value = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Rational& cb = costs[t.basis()[r]];
    if (cb == 0) continue;
    for (std::size_t c = 0; c < t.cols(); ++c)
      if (t.at(r, c) != 0) reduced[c] -= cb * t.at(r, c);
    value -= cb * t.rhs(r);
  }
}

// Bland's rule: lowest-index improving column; ratio ties to the lowest basic index.
bool run_simplex(Tableau& t, std::vector<Rational>& reduced, Rational& value, const std::vector<bool>& allowed) {
  while (true) {
    std::size_t entering = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && reduced[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == t.cols()) return true;

    std::size_t leaving = t.rows();
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, entering) <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, entering);
      if (leaving == t.rows() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis()[r] < t.basis()[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows()) return false;
    t.pivot(leaving, entering, reduced, value);
  }
}

}  // namespace

Solution solve_lp(const LinearProgram& program) {
  const std::size_t n = program.num_variables();

  // Map every original variable onto nonnegative columns.
  std::vector<Substitution> subs(n);
  std::size_t columns = 0;
  std::vector<Constraint> rows;
  for (std::size_t j = 0; j < n; ++j) {
    const Bounds& b = program.bounds()[j];
    if (b.lower) {
      subs[j].offset = *b.lower;
      subs[j].terms.push_back({columns++, Rational(1)});
    } else if (b.upper) {
      subs[j].offset = *b.upper;
      subs[j].terms.push_back({columns++, Rational(-1)});
    } else {
      subs[j].offset = 0;
      subs[j].terms.push_back({columns++, Rational(1)});
      subs[j].terms.push_back({columns++, Rational(-1)});
    }
  }
  auto substitute = [&](const std::vector<Rational>& coeffs, Rational& constant) {
    std::vector<Rational> out(columns, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      if (coeffs[j] == 0) continue;
      constant += coeffs[j] * subs[j].offset;
      for (const auto& [col, sign] : subs[j].terms) out[col] += coeffs[j] * sign;
    }
    return out;
  };

  for (const auto& c : program.constraints()) {
    Rational constant = 0;
    auto coeffs = substitute(c.coefficients, constant);
    rows.push_back({std::move(coeffs), c.relation, c.rhs - constant});
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Bounds& b = program.bounds()[j];
    if (b.lower && b.upper) {
      if (*b.upper < *b.lower) return Solution{Status::infeasible, {}, Rational(0)};
      std::vector<Rational> coeffs(columns, Rational(0));
      coeffs[subs[j].terms.front().first] = 1;
      rows.push_back({std::move(coeffs), Relation::less_equal, *b.upper - *b.lower});
    }
  }

  // Normalize to nonnegative right-hand sides.
  for (auto& row : rows) {
    if (row.rhs < 0) {
      for (auto& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::less_equal)
        row.relation = Relation::greater_equal;
      else if (row.relation == Relation::greater_equal)
        row.relation = Relation::less_equal;
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++slack_count;
    if (row.relation != Relation::less_equal) ++artificial_count;
  }
  const std::size_t first_slack = columns;
  const std::size_t first_artificial = columns + slack_count;
  const std::size_t total = first_artificial + artificial_count;

  Tableau t(rows.size(), total);
  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) t.at(r, c) = rows[r].coefficients[c];
    t.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::less_equal:
        t.at(r, next_slack) = 1;
        t.basis()[r] = next_slack++;
        break;
      case Relation::greater_equal:
        t.at(r, next_slack++) = -1;
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
      case Relation::equal:
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
    }
  }

  std::vector<Rational> reduced;
  Rational value;
  std::vector<bool> allowed(total, true);

  // Phase 1: minimize the sum of artificials.
  if (artificial_count > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t c = first_artificial; c < total; ++c) phase1[c] = 1;
    price(t, phase1, reduced, value);
    run_simplex(t, reduced, value, allowed);
    if (value != 0) return Solution{Status::infeasible, {}, Rational(0)};

    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (t.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col == first_artificial) {
        t.remove_row(r);  // redundant equality
        continue;
      }
      t.pivot(r, col, reduced, value);
      ++r;
    }
    for (std::size_t c = first_artificial; c < total; ++c) allowed[c] = false;
  }

  // Phase 2.
  std::vector<Rational> costs(total, Rational(0));
  {
    Rational constant = 0;
    auto obj = substitute(program.objective(), constant);
    bool maximize = program.sense() == Sense::maximize;
    for (std::size_t c = 0; c < columns; ++c) costs[c] = maximize ? Rational(-obj[c]) : obj[c];
  }
  price(t, costs, reduced, value);
  if (!run_simplex(t, reduced, value, allowed)) return Solution{Status::unbounded, {}, Rational(0)};

  std::vector<Rational> y(total, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) y[t.basis()[r]] = t.rhs(r);
  Solution sol;
  sol.status = Status::optimal;
  sol.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = subs[j].offset;
    for (const auto& [col, sign] : subs[j].terms) x += sign * y[col];
    sol.point[j] = x;
  }
  sol.objective = program.evaluate(sol.point);
  if (!program.is_feasible(sol.point)) throw std::logic_error("simplex returned a point violating the constraints");
  return sol;
}

}  // namespace optimin::lp
