#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "permpoly/permutation.hpp"
#include "permpoly/set_partition.hpp"

namespace permpoly {

inline constexpr std::size_t kDefaultClosureCap = 20160;
inline constexpr std::size_t kDefaultSubgroupCap = 240;

/// A finite permutation group with its full element list.
///
/// Elements are enumerated eagerly and kept sorted (lexicographic on image
/// arrays), so equality of groups is equality of element lists.
class PermGroup {
 public:
  /// Closes `generators` under composition by breadth-first multiplication.
  /// Throws DegreeMismatch, or CapExceeded once more than `cap` elements appear.
  static PermGroup generate(std::vector<Permutation> generators, std::size_t degree,
                            std::size_t cap = kDefaultClosureCap);

  static PermGroup trivial(std::size_t degree);

  /// Wraps a sorted, duplicate-free element list already known to be a group
  /// (e.g. the output of an exhaustive filter over a group). A short generating
  /// set is recovered greedily.
  static PermGroup from_closed_elements(std::vector<Permutation> elements, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::span<const Permutation> elements() const { return elements_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements)
      : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Canonical order: by group order, then element lists lexicographically.
bool canonical_less(const PermGroup& a, const PermGroup& b);

/// The orbit of `point` under G, sorted. Throws std::out_of_range.
std::vector<Point> orbit(const PermGroup& group, Point point);

/// G_i = {g in G : g(i) = i}. Throws std::out_of_range.
PermGroup point_stabilizer(const PermGroup& group, Point point);

/// Partition of the ground set into G-orbits.
SetPartition orbit_partition(const PermGroup& group);

/// stab(G; parts) = {g in G : g(I_k) = I_k for every block I_k} (setwise).
/// Throws DegreeMismatch.
PermGroup partition_stabilizer(const PermGroup& group, const SetPartition& parts);

/// Every subgroup of G exactly once, in canonical order. Built by cyclic
/// extension: starting from the trivial group, adjoin single elements of G to
/// known subgroups until no new subgroup appears. Throws CapExceeded when
/// |G| > cap.
std::vector<PermGroup> enumerate_subgroups(const PermGroup& group,
                                           std::size_t cap = kDefaultSubgroupCap);

}  // namespace permpoly
