#include "permpoly/rational_matrix.hpp"

#include <stdexcept>
#include <string>

#include "permpoly/errors.hpp"

namespace permpoly {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (other.n_ != n_) throw DegreeMismatch("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (other.n_ != n_) throw DegreeMismatch("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) throw DegreeMismatch("matrix dimension mismatch");
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Rational inner_product(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) throw DegreeMismatch("matrix dimension mismatch");
  Rational sum = 0;
  for (std::size_t k = 0; k < a.flat().size(); ++k) sum += a.flat()[k] * b.flat()[k];
  return sum;
}

}  // namespace permpoly

namespace nlohmann {

permpoly::RationalMatrix adl_serializer<permpoly::RationalMatrix>::from_json(const json& j) {
  if (!j.is_array()) throw permpoly::ParseError("matrix: expected an array of rows");
  const std::size_t n = j.size();
  permpoly::RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw permpoly::ParseError("matrix: row " + std::to_string(i) + " is not of length " +
                                 std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_string()) throw permpoly::ParseError("matrix: entries must be strings");
      m(i, c) = permpoly::parse_rational(row[c].get<std::string>());
    }
  }
  return m;
}

void adl_serializer<permpoly::RationalMatrix>::to_json(json& j, const permpoly::RationalMatrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(permpoly::to_string(m(i, c)));
    j.push_back(std::move(row));
  }
}

}  // namespace nlohmann
