#include "permpoly/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permpoly/errors.hpp"

namespace permpoly {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Point x : image_) {
    if (x >= image_.size() || hit[x]) {
      throw std::invalid_argument("permutation image is not a bijection");
    }
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> image(degree);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point x = cycle[k];
      if (x >= degree) {
        throw std::out_of_range("cycle point out of range");
      }
      if (used[x]) {
        throw std::invalid_argument("point repeated across cycles");
      }
      used[x] = true;
      image[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (image_[j] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) {
    inv[image_[j]] = static_cast<Point>(j);
  }
  return Permutation(std::move(inv));
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(image_.size(), false);
  for (Point start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
  std::vector<Point> image(p.degree());
  for (Point j = 0; j < image.size(); ++j) {
    image[j] = p(q(j));
  }
  return Permutation(std::move(image));
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  std::vector<std::vector<Point>> parse() {
    std::vector<std::vector<Point>> cycles;
    skip_space();
    while (pos_ < text_.size()) {
      expect('(');
      std::vector<Point> cycle;
      skip_space();
      if (peek() == ')') {
        ++pos_;
      } else {
        cycle.push_back(read_point());
        for (;;) {
          bool separated = skip_separator();
          if (peek() == ')') {
            ++pos_;
            break;
          }
          if (!separated) fail("expected separator or ')'");
          cycle.push_back(read_point());
        }
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_space();
    }
    return cycles;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool skip_separator() {
    std::size_t before = pos_;
    skip_space();
    if (peek() == ',') {
      ++pos_;
      skip_space();
    }
    return pos_ != before;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Point read_point() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a point");
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > degree_) fail("point out of range 1.." + std::to_string(degree_));
      ++pos_;
    }
    if (value == 0) fail("point out of range 1.." + std::to_string(degree_));
    return static_cast<Point>(value - 1);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cycle notation \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  auto cycles = CycleParser(text, degree).parse();
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const std::logic_error& e) {
    throw ParseError("cycle notation \"" + std::string(text) + "\": " + e.what());
  }
}

std::string to_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cycles) {
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) os << ' ';
      os << cycle[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

}  // namespace permpoly

std::size_t std::hash<permpoly::Permutation>::operator()(
    const permpoly::Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (auto x : p.image()) {
    h = h * 1000003u ^ x;
  }
  return h;
}
