#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

/// A point of the ground set, 0-indexed internally. All text I/O is 1-indexed.
using Point = std::uint32_t;

/// A bijection of {0..n-1}, stored as its image array: image[j] = sigma(j).
///
/// Ordering is lexicographic on the image array, which is the canonical
/// element order used by PermGroup.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `image` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> image);

  /// Builds a permutation from disjoint cycles of 0-indexed points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point j) const { return image_[j]; }
  std::span<const Point> image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> image_;
};

/// (p o q)(i) = p(q(i)): q is applied first. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Parses disjoint-cycle notation such as "(1 2 3)(4,5)". Points are 1-indexed
/// and must lie in 1..degree; the empty string and "()" denote the identity.
/// Throws ParseError.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Disjoint-cycle notation with fixed points omitted; the identity renders as "()".
std::string to_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace permpoly

template <>
struct std::hash<permpoly::Permutation> {
  std::size_t operator()(const permpoly::Permutation& p) const noexcept;
};
