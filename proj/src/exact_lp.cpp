#include "permpoly/exact_lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace permpoly::lp {

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != num_vars_) {
    throw std::invalid_argument("objective length does not match variable count");
  }
  objective_ = std::move(coefficients);
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                   Rational rhs) {
  if (coefficients.size() != num_vars_) {
    throw std::invalid_argument("constraint length does not match variable count");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::add_upper_bound(std::size_t var, const Rational& value) {
  std::vector<Rational> row(num_vars_);
  row.at(var) = 1;
  add_constraint(std::move(row), Relation::LessEqual, value);
}

void LinearProgram::add_lower_bound(std::size_t var, const Rational& value) {
  std::vector<Rational> row(num_vars_);
  row.at(var) = -1;
  add_constraint(std::move(row), Relation::LessEqual, -value);
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Optimal:
      return "optimal";
    case Status::Infeasible:
      return "infeasible";
    case Status::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in equality form  T x = rhs,  x >= 0.
// Column layout: [x+ (V) | x- (V) | slacks | artificials].
class Tableau {
 public:
  explicit Tableau(const LinearProgram& program) : vars_(program.num_vars()) {
    const auto& constraints = program.constraints();
    std::size_t slacks = 0;
    for (const auto& c : constraints) slacks += c.relation == Relation::LessEqual;
    slack_begin_ = 2 * vars_;
    artificial_begin_ = slack_begin_ + slacks;

    // Decide which rows need an artificial before sizing the tableau.
    std::vector<bool> needs_artificial;
    for (const auto& c : constraints) {
      needs_artificial.push_back(c.relation == Relation::Equal || c.rhs < 0);
    }
    std::size_t artificials = 0;
    for (bool b : needs_artificial) artificials += b;
    cols_ = artificial_begin_ + artificials;

    std::size_t slack = slack_begin_;
    std::size_t artificial = artificial_begin_;
    for (std::size_t r = 0; r < constraints.size(); ++r) {
      const auto& c = constraints[r];
      std::vector<Rational> row(cols_ + 1);
      for (std::size_t j = 0; j < vars_; ++j) {
        row[j] = c.coefficients[j];
        row[vars_ + j] = -c.coefficients[j];
      }
      std::size_t slack_col = kNone;
      if (c.relation == Relation::LessEqual) {
        slack_col = slack++;
        row[slack_col] = 1;
      }
      row[cols_] = c.rhs;
      if (c.rhs < 0) {
        for (auto& v : row) v = -v;
      }
      if (needs_artificial[r]) {
        row[artificial] = 1;
        basis_.push_back(artificial++);
      } else {
        basis_.push_back(slack_col);
      }
      rows_.push_back(std::move(row));
    }
  }

  bool has_artificials() const { return cols_ > artificial_begin_; }

  // Phase 1: maximize -(sum of artificials). Returns false if infeasible.
  bool phase_one() {
    if (!has_artificials()) return true;
    std::vector<Rational> cost(cols_);
    for (std::size_t j = artificial_begin_; j < cols_; ++j) cost[j] = -1;
    set_objective(cost);
    run(cols_);  // bounded above by 0, never unbounded
    if (objective_row_[cols_] != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 over the original objective; artificial columns may not enter.
  Status phase_two(const std::vector<Rational>& objective) {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < vars_; ++j) {
      cost[j] = objective[j];
      cost[vars_ + j] = -objective[j];
    }
    set_objective(cost);
    return run(artificial_begin_) ? Status::Optimal : Status::Unbounded;
  }

  Rational value() const { return -objective_row_[cols_]; }

  std::vector<Rational> solution() const {
    std::vector<Rational> value(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) value[basis_[r]] = rows_[r][cols_];
    std::vector<Rational> x(vars_);
    for (std::size_t j = 0; j < vars_; ++j) x[j] = value[j] - value[vars_ + j];
    return x;
  }

 private:
  // Reduced costs d_j = cost_j - cost_B . column_j; rhs slot holds -(cost_B . b),
  // i.e. the negated objective value.
  void set_objective(const std::vector<Rational>& cost) {
    objective_row_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) objective_row_[j] = cost[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) objective_row_[j] -= cb * rows_[r][j];
    }
  }

  // Bland's rule simplex over columns [0, column_limit). Returns false if unbounded.
  bool run(std::size_t column_limit) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (objective_row_[j] > 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][entering];
        if (a <= 0) continue;
        Rational ratio = rows_[r][cols_] / a;
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& prow = rows_[row];
    const Rational inv = 1 / prow[col];
    for (auto& v : prow) v *= inv;
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col] == 0) return;
      const Rational factor = target[col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (prow[j] != 0) target[j] -= factor * prow[j];
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != row) eliminate(rows_[r]);
    }
    eliminate(objective_row_);
    basis_[row] = col;
  }

  // After a feasible phase 1, artificials left in the basis sit at zero. Pivot
  // them out on any nonzero structural entry, or drop the row as redundant.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < artificial_begin_) {
        ++r;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (rows_[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col != kNone) {
        pivot(r, col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::size_t vars_;
  std::size_t slack_begin_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;  // each of length cols_ + 1, rhs last
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_row_;
};

}  // namespace

LpResult maximize(const LinearProgram& program) {
  Tableau tableau(program);
  LpResult result;
  if (!tableau.phase_one()) {
    result.status = Status::Infeasible;
    return result;
  }
  result.status = tableau.phase_two(program.objective());
  if (result.status == Status::Optimal) {
    result.solution = tableau.solution();
    result.optimum = tableau.value();
  }
  return result;
}

bool satisfies(const LinearProgram& program, std::span<const Rational> x) {
  if (x.size() != program.num_vars()) return false;
  for (const auto& c : program.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

Rational objective_value(const LinearProgram& program, std::span<const Rational> x) {
  Rational value = 0;
  for (std::size_t j = 0; j < program.num_vars(); ++j) value += program.objective()[j] * x[j];
  return value;
}

}  // namespace permpoly::lp
