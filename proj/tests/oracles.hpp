// Independent reference computations used only by the tests. None of these
// call into the code paths they are used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "group_spec.hpp"
#include "permpoly/exact_lp.hpp"
#include "permpoly/perm_group.hpp"
#include "permpoly/rational.hpp"

namespace permpoly::testing {

/// Applies q then p by following images explicitly.
inline std::vector<Point> apply_then(const Permutation& p, const Permutation& q) {
  std::vector<Point> out(p.degree());
  for (Point j = 0; j < p.degree(); ++j) {
    Point after_q = q.image()[j];
    out[j] = p.image()[after_q];
  }
  return out;
}

/// Every subgroup of G as a set of elements, found by testing each subset
/// containing the identity for closure under composition. Exponential in |G|.
inline std::set<std::set<Permutation>> brute_force_subgroups(const PermGroup& group) {
  std::vector<Permutation> others;
  for (const auto& g : group.elements()) {
    if (!g.is_identity()) others.push_back(g);
  }
  std::set<std::set<Permutation>> result;
  const std::uint64_t limit = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::set<Permutation> subset{Permutation(group.degree())};
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask >> k & 1) subset.insert(others[k]);
    }
    bool closed = true;
    for (auto a = subset.begin(); a != subset.end() && closed; ++a) {
      for (auto b = subset.begin(); b != subset.end() && closed; ++b) {
        closed = subset.count(Permutation(apply_then(*a, *b))) > 0;
      }
    }
    if (closed) result.insert(std::move(subset));
  }
  return result;
}

/// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<__int128>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

/// Integer rank of the flattened differences M(g) - M(id), M[i][j] = [g(j) = i].
inline std::size_t dimension_oracle(const PermGroup& group) {
  const std::size_t n = group.degree();
  std::vector<std::vector<__int128>> rows;
  for (const auto& g : group.elements()) {
    std::vector<__int128> row(n * n, 0);
    for (Point j = 0; j < n; ++j) {
      row[g.image()[j] * n + j] += 1;
      row[j * n + j] -= 1;
    }
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows));
}

/// Determinant by Laplace expansion along the first row.
inline Rational laplace_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Rational term = a[0][c] * laplace_det(minor);
    det += c % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

/// Solves a square system by Cramer's rule; nullopt when singular.
inline std::optional<std::vector<Rational>> cramer(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<Rational>& b) {
  const Rational det = laplace_det(a);
  if (det == 0) return std::nullopt;
  std::vector<Rational> x(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto replaced = a;
    for (std::size_t r = 0; r < a.size(); ++r) replaced[r][c] = b[r];
    x[c] = laplace_det(replaced) / det;
  }
  return x;
}

/// Maximum of the objective over all vertices of a bounded LP, found by making
/// every choice of num_vars constraints tight. nullopt means infeasible.
inline std::optional<Rational> vertex_enumeration_max(const lp::LinearProgram& program) {
  const std::size_t d = program.num_vars();
  const auto& cons = program.constraints();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(d);
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& c : cons) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < d; ++j) lhs += c.coefficients[j] * x[j];
      if (c.relation == lp::Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return false;
    }
    return true;
  };
  // Iterate over d-combinations of constraint indices.
  std::vector<bool> chosen(cons.size(), false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(d), true);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t k = 0; k < cons.size(); ++k) {
      if (!chosen[k]) continue;
      a.push_back(cons[k].coefficients);
      b.push_back(cons[k].rhs);
    }
    auto x = cramer(a, b);
    if (!x || !feasible(*x)) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < d; ++j) value += program.objective()[j] * (*x)[j];
    if (!best || value > *best) best = value;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return best;
}

/// A random LP in 2 or 3 variables, bounded by a box |x_i| <= bound plus a few
/// random inequalities and occasionally an equality.
inline lp::LinearProgram random_bounded_lp(std::mt19937& rng) {
  std::uniform_int_distribution<int> vars_dist(2, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> rhs(-8, 12);
  std::uniform_int_distribution<int> extra(1, 4);
  std::uniform_int_distribution<int> bound(1, 6);
  std::bernoulli_distribution equality(0.2);

  const auto d = static_cast<std::size_t>(vars_dist(rng));
  lp::LinearProgram program(d);
  for (std::size_t j = 0; j < d; ++j) {
    program.add_upper_bound(j, bound(rng));
    program.add_lower_bound(j, -bound(rng));
  }
  const int m = extra(rng);
  for (int k = 0; k < m; ++k) {
    std::vector<Rational> row(d);
    for (auto& v : row) v = coeff(rng);
    program.add_constraint(std::move(row),
                           equality(rng) ? lp::Relation::Equal : lp::Relation::LessEqual,
                           Rational(rhs(rng), 1 + std::abs(coeff(rng))));
  }
  std::vector<Rational> objective(d);
  for (auto& v : objective) v = coeff(rng);
  program.set_objective(std::move(objective));
  return program;
}

/// Groups the acceptance criteria quantify over.
inline std::vector<cli::GroupSpec> corpus() {
  std::vector<cli::GroupSpec> specs{cli::symmetric_group(3), cli::symmetric_group(4),
                                    cli::alternating_group(4)};
  for (std::size_t n = 2; n <= 8; ++n) specs.push_back(cli::cyclic_group(n));
  for (std::size_t n = 3; n <= 8; ++n) specs.push_back(cli::dihedral_group(n));
  return specs;
}

}  // namespace permpoly::testing
