#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permpoly/perm_group.hpp"
#include "permpoly/rational_matrix.hpp"
#include "permpoly/set_partition.hpp"

namespace permpoly {

/// Supporting functional for a face of P(G): <c, M(h)> = b on the face's
/// vertices and < b on every other vertex of P(G).
struct FaceCertificate {
  RationalMatrix functional;
  Rational level;

  bool operator==(const FaceCertificate&) const = default;
};

/// Upper bound on |G| (one LP row per element) accepted by the LP face test.
inline constexpr std::size_t kDefaultLpRowCap = 5040;

/// <c, M(g)> = sum_j c[g(j)][j].
Rational evaluate(const RationalMatrix& functional, const Permutation& g);

/// P(H) is a face of P(G) iff H = stab(G; orbit partition of H).
///
/// If P(H) is a face, then P(H) and P(stab) are both faces sharing the common
/// barycenter as a relative interior point, so they coincide. Conversely
/// stabilizers of partitions are faces (see stabilizer_certificate).
/// Throws DegreeMismatch or NotASubgroup.
bool is_face_combinatorial(const PermGroup& sub, const PermGroup& group);

/// c[i][j] = 1 if i and j share a block, else 0; b = n. Then <c, M(g)> counts
/// the points j whose image stays in j's block, which equals n exactly when g
/// preserves every block. Throws DegreeMismatch.
FaceCertificate stabilizer_certificate(const PermGroup& group, const SetPartition& parts);

/// Exact check of the certificate over all elements of G. Throws
/// DegreeMismatch or NotASubgroup.
bool verify_certificate(const FaceCertificate& cert, const PermGroup& sub, const PermGroup& group);

struct GeometricVerdict {
  bool is_face = false;
  std::optional<FaceCertificate> certificate;
  Rational slack;  // optimal separation epsilon; 0 when not a face
};

/// Decides whether P(H) is a face of P(G) by linear programming. Faces of a
/// polytope are the argmax sets of linear functionals and the vertices of
/// P(G) are exactly the elements of G, so P(H) is a face iff some (c, b, eps)
/// satisfies
///   <c, M(h)> = b            for h in H,
///   <c, M(g)> <= b - eps     for g in G \ H,
///   eps <= 1,
/// with eps > 0. The LP maximizes eps; the certificate is (c, b) with
/// denominators cleared. H = G gives the trivial certificate (0, 0).
/// Throws DegreeMismatch, NotASubgroup, or CapExceeded when |G| > row_cap.
GeometricVerdict is_face_geometric(const PermGroup& sub, const PermGroup& group,
                                   std::size_t row_cap = kDefaultLpRowCap);

/// All subgroups H of G with is_face_combinatorial(H, G), in canonical order.
std::vector<PermGroup> face_subgroups(const PermGroup& group,
                                      std::size_t cap = kDefaultSubgroupCap);

}  // namespace permpoly
