#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permpoly/exact_lp.hpp"

namespace permpoly::lp {
namespace {

std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> r;
  for (long v : values) r.emplace_back(v);
  return r;
}

void expect_consistent(const LinearProgram& program, const LpResult& result) {
  if (result.status != Status::Optimal) return;
  EXPECT_TRUE(satisfies(program, result.solution));
  EXPECT_EQ(objective_value(program, result.solution), result.optimum);
}

TEST(Maximize, SingleUpperBound) {
  LinearProgram program(1);
  program.set_objective(row({1}));
  program.add_upper_bound(0, 3);
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, 3);
  expect_consistent(program, result);
}

TEST(Maximize, ContradictoryBoundsAreInfeasible) {
  LinearProgram program(1);
  program.set_objective(row({1}));
  program.add_constraint(row({1}), Relation::LessEqual, 1);
  program.add_constraint(row({-1}), Relation::LessEqual, -2);
  EXPECT_EQ(maximize(program).status, Status::Infeasible);
}

TEST(Maximize, TwoVariableTextbookProblem) {
  LinearProgram program(2);
  program.set_objective(row({1, 1}));
  program.add_constraint(row({1, 2}), Relation::LessEqual, 4);
  program.add_constraint(row({3, 1}), Relation::LessEqual, 6);
  program.add_lower_bound(0, 0);
  program.add_lower_bound(1, 0);
  // Vertex enumeration over the four constraints: (0,0), (2,0), (0,2), (8/5, 6/5);
  // the last one wins with 8/5 + 6/5 = 14/5.
  ASSERT_EQ(testing::vertex_enumeration_max(program), Rational(14, 5));
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, Rational(14, 5));
  EXPECT_EQ(result.solution, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
  expect_consistent(program, result);
}

TEST(Maximize, FreeVariablesTakeNegativeValues) {
  LinearProgram program(2);
  program.set_objective(row({-1, 0}));
  program.add_constraint(row({1, 1}), Relation::Equal, 0);
  program.add_lower_bound(0, -7);
  program.add_upper_bound(1, 100);
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, 7);
  EXPECT_EQ(result.solution, (std::vector<Rational>{-7, 7}));
}

TEST(Maximize, Unbounded) {
  LinearProgram program(2);
  program.set_objective(row({1, 1}));
  program.add_constraint(row({1, -1}), Relation::LessEqual, 2);
  EXPECT_EQ(maximize(program).status, Status::Unbounded);

  LinearProgram empty(1);
  empty.set_objective(row({1}));
  EXPECT_EQ(maximize(empty).status, Status::Unbounded);
}

TEST(Maximize, ZeroObjectiveWithoutConstraints) {
  LinearProgram program(3);
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, 0);
}

TEST(Maximize, RedundantEqualitiesAreTolerated) {
  LinearProgram program(2);
  program.set_objective(row({1, 2}));
  program.add_constraint(row({1, 1}), Relation::Equal, 2);
  program.add_constraint(row({2, 2}), Relation::Equal, 4);
  program.add_lower_bound(0, 0);
  program.add_lower_bound(1, 0);
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, 4);
  expect_consistent(program, result);
}

TEST(Maximize, DegenerateVertexTerminates) {
  // Many constraints tight at the origin; Bland's rule must not cycle.
  LinearProgram program(3);
  program.set_objective(row({1, 1, 1}));
  program.add_constraint(row({1, -1, 0}), Relation::LessEqual, 0);
  program.add_constraint(row({0, 1, -1}), Relation::LessEqual, 0);
  program.add_constraint(row({-1, 0, 1}), Relation::LessEqual, 0);
  program.add_constraint(row({1, 1, -2}), Relation::LessEqual, 0);
  program.add_constraint(row({1, 1, 1}), Relation::LessEqual, 3);
  const auto result = maximize(program);
  ASSERT_EQ(result.status, Status::Optimal);
  EXPECT_EQ(result.optimum, 3);
  expect_consistent(program, result);
}

TEST(Maximize, RejectsMalformedRows) {
  LinearProgram program(2);
  EXPECT_THROW(program.add_constraint(row({1}), Relation::LessEqual, 0), std::invalid_argument);
  EXPECT_THROW(program.set_objective(row({1, 2, 3})), std::invalid_argument);
}

TEST(Maximize, RandomBoundedProgramsMatchVertexEnumeration) {
  std::mt19937 rng(2024);
  int infeasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto program = testing::random_bounded_lp(rng);
    const auto expected = testing::vertex_enumeration_max(program);
    const auto result = maximize(program);
    if (!expected) {
      ++infeasible;
      EXPECT_EQ(result.status, Status::Infeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(result.status, Status::Optimal) << "trial " << trial;
    EXPECT_EQ(result.optimum, *expected) << "trial " << trial;
    expect_consistent(program, result);
  }
  EXPECT_LT(infeasible, 100);
}

TEST(Maximize, Deterministic) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto program = testing::random_bounded_lp(rng);
    const auto a = maximize(program);
    const auto b = maximize(program);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.solution, b.solution);
  }
}

}  // namespace
}  // namespace permpoly::lp
