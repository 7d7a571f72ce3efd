#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/permutation.hpp"

namespace permpoly {

/// A partition of {0..n-1} into disjoint nonempty blocks.
///
/// Blocks are sorted internally and ordered by their smallest point, so two
/// partitions are equal iff their representations are equal.
class SetPartition {
 public:
  /// The empty partition of the empty set.
  SetPartition() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument on overlap,
  /// empty blocks, out-of-range points or incomplete cover.
  SetPartition(std::size_t degree, std::vector<std::vector<Point>> parts);

  static SetPartition singletons(std::size_t degree);
  static SetPartition whole(std::size_t degree);

  std::size_t degree() const { return block_of_.size(); }
  std::size_t size() const { return parts_.size(); }
  const std::vector<std::vector<Point>>& parts() const { return parts_; }
  const std::vector<Point>& part(std::size_t k) const { return parts_[k]; }

  /// Index of the block containing `j`.
  std::size_t block_of(Point j) const { return block_of_[j]; }
  bool same_block(Point i, Point j) const { return block_of_[i] == block_of_[j]; }

  bool operator==(const SetPartition& other) const { return parts_ == other.parts_; }
  auto operator<=>(const SetPartition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<std::vector<Point>> parts_;
  std::vector<std::size_t> block_of_;
};

/// Parses "1,2|3,4" (1-indexed). Throws ParseError.
SetPartition parse_partition(std::string_view text, std::size_t degree);

/// Renders as "1,2|3,4".
std::string to_string(const SetPartition& parts);

std::ostream& operator<<(std::ostream& os, const SetPartition& parts);

/// Every set partition of {0..n-1}, in restricted-growth-string order.
/// There are Bell(n) of them (52 at n = 5).
std::vector<SetPartition> all_partitions(std::size_t degree);

}  // namespace permpoly
