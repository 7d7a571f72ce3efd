#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "permpoly/rational.hpp"

namespace permpoly {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }

  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

  /// Row-major flattening to a length-n^2 vector.
  const std::vector<Rational>& flat() const { return entries_; }

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Entrywise (Frobenius) inner product sum_ij a[i][j] * b[i][j].
Rational inner_product(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace permpoly

// JSON form: an n x n array of "p/q" strings. RationalMatrix has no default
// constructor, hence the serializer specialization.
namespace nlohmann {
template <>
struct adl_serializer<permpoly::RationalMatrix> {
  static permpoly::RationalMatrix from_json(const json& j);
  static void to_json(json& j, const permpoly::RationalMatrix& m);
};
}  // namespace nlohmann
