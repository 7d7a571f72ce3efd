#include "permpoly/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

std::vector<Permutation> close_under(const std::vector<Permutation>& generators,
                                     std::size_t degree, std::size_t cap) {
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return elements;
}

[[maybe_unused]] bool is_closed(const std::vector<Permutation>& sorted) {
  for (const auto& a : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), a.inverse())) return false;
    for (const auto& b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), compose(a, b))) return false;
    }
  }
  return true;
}

void check_point(const PermGroup& group, Point point) {
  if (point >= group.degree()) {
    throw std::out_of_range("point " + std::to_string(point + 1) + " outside 1.." +
                            std::to_string(group.degree()));
  }
}

}  // namespace

PermGroup PermGroup::generate(std::vector<Permutation> generators, std::size_t degree,
                              std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + to_string(g) + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }
  auto elements = close_under(generators, degree, cap);
  return PermGroup(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {}, {Permutation(degree)});
}

PermGroup PermGroup::from_closed_elements(std::vector<Permutation> elements, std::size_t degree) {
  assert(std::is_sorted(elements.begin(), elements.end()));
  assert(is_closed(elements));
  std::vector<Permutation> generators;
  std::vector<Permutation> span{Permutation(degree)};
  for (const auto& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    generators.push_back(e);
    span = close_under(generators, degree, elements.size());
  }
  return PermGroup(degree, std::move(generators), std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool canonical_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

std::vector<Point> orbit(const PermGroup& group, Point point) {
  check_point(group, point);
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const auto& g : group.generators()) {
      Point y = g(result[k]);
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

PermGroup point_stabilizer(const PermGroup& group, Point point) {
  check_point(group, point);
  std::vector<Permutation> kept;
  for (const auto& g : group.elements()) {
    if (g(point) == point) kept.push_back(g);
  }
  return PermGroup::from_closed_elements(std::move(kept), group.degree());
}

SetPartition orbit_partition(const PermGroup& group) {
  std::vector<bool> covered(group.degree(), false);
  std::vector<std::vector<Point>> parts;
  for (Point x = 0; x < group.degree(); ++x) {
    if (covered[x]) continue;
    auto o = orbit(group, x);
    for (Point y : o) covered[y] = true;
    parts.push_back(std::move(o));
  }
  return SetPartition(group.degree(), std::move(parts));
}

PermGroup partition_stabilizer(const PermGroup& group, const SetPartition& parts) {
  if (parts.degree() != group.degree()) {
    throw DegreeMismatch("partition of degree " + std::to_string(parts.degree()) +
                         " for group of degree " + std::to_string(group.degree()));
  }
  // A bijection mapping every block into itself maps it onto itself.
  std::vector<Permutation> kept;
  for (const auto& g : group.elements()) {
    bool preserves = true;
    for (Point j = 0; j < group.degree() && preserves; ++j) {
      preserves = parts.same_block(g(j), j);
    }
    if (preserves) kept.push_back(g);
  }
  return PermGroup::from_closed_elements(std::move(kept), group.degree());
}

std::vector<PermGroup> enumerate_subgroups(const PermGroup& group, std::size_t cap) {
  if (group.order() > cap) {
    throw CapExceeded("subgroup enumeration is capped at groups of order " +
                      std::to_string(cap) + ", got " + std::to_string(group.order()));
  }
  const std::size_t degree = group.degree();
  std::set<std::vector<Permutation>> seen;
  std::vector<PermGroup> found{PermGroup::trivial(degree)};
  seen.insert({Permutation(degree)});
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& g : group.elements()) {
      if (found[k].contains(g)) continue;
      auto gens = found[k].generators();
      gens.push_back(g);
      auto extended = PermGroup::generate(std::move(gens), degree, group.order());
      std::vector<Permutation> key(extended.elements().begin(), extended.elements().end());
      if (seen.insert(std::move(key)).second) found.push_back(std::move(extended));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace permpoly
