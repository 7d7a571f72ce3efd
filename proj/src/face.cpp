#include "permpoly/face.hpp"

#include <algorithm>
#include <string>

#include "permpoly/errors.hpp"
#include "permpoly/exact_lp.hpp"

namespace permpoly {

namespace {

void require_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) {
    throw DegreeMismatch("subgroup of degree " + std::to_string(sub.degree()) +
                         " in group of degree " + std::to_string(group.degree()));
  }
  if (!sub.is_subgroup_of(group)) {
    throw NotASubgroup("the given subgroup is not contained in the ambient group");
  }
}

// Scales (c, b) by a positive rational so every entry is an integer with no
// common factor.
FaceCertificate clear_denominators(FaceCertificate cert) {
  Integer lcm = 1;
  auto absorb_den = [&](const Rational& r) {
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(r)));
  };
  for (const auto& e : cert.functional.flat()) absorb_den(e);
  absorb_den(cert.level);

  Integer gcd = 0;
  auto absorb_num = [&](const Rational& r) {
    Integer scaled = numerator(r) * (lcm / denominator(r));
    gcd = boost::multiprecision::gcd(gcd, scaled);
  };
  for (const auto& e : cert.functional.flat()) absorb_num(e);
  absorb_num(cert.level);
  if (gcd == 0) return cert;

  const Rational scale(lcm, abs(gcd));
  cert.functional *= scale;
  cert.level *= scale;
  return cert;
}

}  // namespace

Rational evaluate(const RationalMatrix& functional, const Permutation& g) {
  if (functional.dim() != g.degree()) throw DegreeMismatch("functional dimension mismatch");
  Rational sum = 0;
  for (Point j = 0; j < g.degree(); ++j) sum += functional(g(j), j);
  return sum;
}

bool is_face_combinatorial(const PermGroup& sub, const PermGroup& group) {
  require_subgroup(sub, group);
  return partition_stabilizer(group, orbit_partition(sub)) == sub;
}

FaceCertificate stabilizer_certificate(const PermGroup& group, const SetPartition& parts) {
  const std::size_t n = group.degree();
  if (parts.degree() != n) {
    throw DegreeMismatch("partition of degree " + std::to_string(parts.degree()) +
                         " for group of degree " + std::to_string(n));
  }
  RationalMatrix c(n);
  for (Point i = 0; i < n; ++i) {
    for (Point j = 0; j < n; ++j) {
      if (parts.same_block(i, j)) c(i, j) = 1;
    }
  }
  return {std::move(c), Rational(static_cast<long>(n))};
}

bool verify_certificate(const FaceCertificate& cert, const PermGroup& sub, const PermGroup& group) {
  require_subgroup(sub, group);
  if (cert.functional.dim() != group.degree()) {
    throw DegreeMismatch("certificate dimension does not match group degree");
  }
  for (const auto& g : group.elements()) {
    const Rational value = evaluate(cert.functional, g);
    if (sub.contains(g) ? value != cert.level : value >= cert.level) return false;
  }
  return true;
}

GeometricVerdict is_face_geometric(const PermGroup& sub, const PermGroup& group,
                                   std::size_t row_cap) {
  require_subgroup(sub, group);
  const std::size_t n = group.degree();
  GeometricVerdict verdict;
  if (sub.order() == group.order()) {
    verdict.is_face = true;
    verdict.certificate = FaceCertificate{RationalMatrix(n), Rational(0)};
    verdict.slack = 0;
    return verdict;
  }
  if (group.order() > row_cap) {
    throw CapExceeded("LP face test is capped at groups of order " + std::to_string(row_cap) +
                      ", got " + std::to_string(group.order()));
  }

  // Variables: c (n*n, row-major), then b, then eps.
  const std::size_t b_var = n * n;
  const std::size_t eps_var = b_var + 1;
  lp::LinearProgram program(eps_var + 1);
  for (const auto& g : group.elements()) {
    std::vector<Rational> row(program.num_vars());
    for (Point j = 0; j < n; ++j) row[g(j) * n + j] = 1;
    row[b_var] = -1;
    if (sub.contains(g)) {
      program.add_constraint(std::move(row), lp::Relation::Equal, 0);
    } else {
      row[eps_var] = 1;
      program.add_constraint(std::move(row), lp::Relation::LessEqual, 0);
    }
  }
  program.add_upper_bound(eps_var, 1);
  std::vector<Rational> objective(program.num_vars());
  objective[eps_var] = 1;
  program.set_objective(std::move(objective));

  const auto result = lp::maximize(program);
  // c = 0, b = 0, eps = 0 is always feasible and eps <= 1 bounds the objective.
  if (result.status != lp::Status::Optimal) {
    throw std::logic_error("face LP returned " + std::string(lp::to_string(result.status)));
  }
  verdict.slack = result.optimum;
  verdict.is_face = result.optimum > 0;
  if (verdict.is_face) {
    RationalMatrix c(n);
    for (std::size_t k = 0; k < n * n; ++k) c(k / n, k % n) = result.solution[k];
    verdict.certificate = clear_denominators({std::move(c), result.solution[b_var]});
  }
  return verdict;
}

std::vector<PermGroup> face_subgroups(const PermGroup& group, std::size_t cap) {
  std::vector<PermGroup> faces;
  for (auto& sub : enumerate_subgroups(group, cap)) {
    if (is_face_combinatorial(sub, group)) faces.push_back(std::move(sub));
  }
  return faces;
}

}  // namespace permpoly
