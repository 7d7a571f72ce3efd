#include "permpoly/polytope.hpp"

#include <utility>

#include "permpoly/errors.hpp"

namespace permpoly {

RationalMatrix permutation_matrix(const Permutation& p) {
  RationalMatrix m(p.degree());
  for (Point j = 0; j < p.degree(); ++j) m(p(j), j) = 1;
  return m;
}

RationalMatrix barycenter_by_sum(const PermGroup& group) {
  RationalMatrix sum(group.degree());
  for (const auto& g : group.elements()) {
    for (Point j = 0; j < group.degree(); ++j) sum(g(j), j) += 1;
  }
  sum *= Rational(1, static_cast<long>(group.order()));
  return sum;
}

RationalMatrix barycenter_from_orbits(const PermGroup& group) {
  const auto orbits = orbit_partition(group);
  RationalMatrix a(group.degree());
  for (const auto& block : orbits.parts()) {
    const Rational weight(1, static_cast<long>(block.size()));
    for (Point i : block) {
      for (Point j : block) a(i, j) = weight;
    }
  }
  return a;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // Normalize the pivot row so eliminations subtract plain multiples.
    const Rational inv = 1 / rows[rank][col];
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] *= inv;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_dimension(const PermGroup& group) {
  const auto base = permutation_matrix(Permutation(group.degree()));
  std::vector<std::vector<Rational>> rows;
  rows.reserve(group.order());
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    rows.push_back((permutation_matrix(g) - base).flat());
  }
  return exact_rank(std::move(rows));
}

bool polytope_equal(const PermGroup& h1, const PermGroup& h2) {
  if (h1.degree() != h2.degree()) {
    throw DegreeMismatch("cannot compare polytopes of degree " + std::to_string(h1.degree()) +
                         " and " + std::to_string(h2.degree()));
  }
  return h1 == h2;
}

bool is_doubly_stochastic(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    Rational col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < 0) return false;
      row += m(i, j);
      col += m(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

}  // namespace permpoly
