#pragma once

#include <cstddef>
#include <vector>

#include "permpoly/perm_group.hpp"
#include "permpoly/permutation.hpp"
#include "permpoly/rational_matrix.hpp"

namespace permpoly {

/// 0/1 matrix with M[i][j] = 1 iff p(j) = i. Under this convention
/// permutation_matrix(p o q) = permutation_matrix(p) * permutation_matrix(q).
RationalMatrix permutation_matrix(const Permutation& p);

/// The vertex barycenter (1/|G|) sum_g M(g), computed by summing over every
/// element.
RationalMatrix barycenter_by_sum(const PermGroup& group);

/// The vertex barycenter from the orbit partition alone: a_ij = 1/|G.i| if i
/// and j share an orbit, else 0. Agrees exactly with barycenter_by_sum, since
/// the ij-entry of the sum counts g with g(j) = i, which is either 0 or |G_i|,
/// and |G| = |G_i| |G.i|.
RationalMatrix barycenter_from_orbits(const PermGroup& group);

/// Rank over Q of the given row vectors (all of equal length).
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// Dimension of the affine hull of {M(g) : g in G}, i.e. the rank of the
/// flattened differences M(g) - M(id).
std::size_t affine_dimension(const PermGroup& group);

/// P(H1) = P(H2) as polytopes. Permutation matrices are vertices of the
/// Birkhoff polytope, so each element of a group is a vertex of its own hull
/// and the vertex sets, hence the polytopes, agree iff the element sets do.
/// Throws DegreeMismatch.
bool polytope_equal(const PermGroup& h1, const PermGroup& h2);

/// Every row and column sums to exactly 1 and no entry is negative.
bool is_doubly_stochastic(const RationalMatrix& m);

}  // namespace permpoly
