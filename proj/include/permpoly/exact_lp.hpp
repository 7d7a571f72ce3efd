#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "permpoly/rational.hpp"

namespace permpoly::lp {

enum class Relation { LessEqual, Equal };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// maximize objective . x subject to the constraints. Variables are free
/// unless a bound constraint says otherwise.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), objective_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Throws std::invalid_argument on a length mismatch.
  void set_objective(std::vector<Rational> coefficients);
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  /// x[var] <= value and x[var] >= value respectively.
  void add_upper_bound(std::size_t var, const Rational& value);
  void add_lower_bound(std::size_t var, const Rational& value);

 private:
  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

enum class Status { Optimal, Infeasible, Unbounded };

std::string_view to_string(Status status);

struct LpResult {
  Status status = Status::Infeasible;
  Rational optimum;                // meaningful when Optimal
  std::vector<Rational> solution;  // meaningful when Optimal
};

/// Two-phase primal simplex over a dense rational tableau. Free variables are
/// split as x = x+ - x-, and Bland's smallest-index rule picks both entering
/// and leaving variables, so the method terminates and is deterministic.
LpResult maximize(const LinearProgram& program);

/// Exact check that `x` satisfies every constraint.
bool satisfies(const LinearProgram& program, std::span<const Rational> x);

Rational objective_value(const LinearProgram& program, std::span<const Rational> x);

}  // namespace permpoly::lp
