#include "permpoly/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
}

SetPartition::SetPartition(std::size_t degree, std::vector<std::vector<Point>> parts)
    : parts_(std::move(parts)), block_of_(degree, kUnassigned) {
  for (auto& block : parts_) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    for (Point x : parts_[k]) {
      if (x >= degree) throw std::invalid_argument("partition point out of range");
      if (block_of_[x] != kUnassigned) {
        throw std::invalid_argument("partition blocks overlap at point " + std::to_string(x + 1));
      }
      block_of_[x] = k;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (block_of_[x] == kUnassigned) {
      throw std::invalid_argument("partition does not cover point " + std::to_string(x + 1));
    }
  }
}

SetPartition SetPartition::singletons(std::size_t degree) {
  std::vector<std::vector<Point>> parts;
  for (Point x = 0; x < degree; ++x) parts.push_back({x});
  return SetPartition(degree, std::move(parts));
}

SetPartition SetPartition::whole(std::size_t degree) {
  std::vector<Point> all(degree);
  for (Point x = 0; x < degree; ++x) all[x] = x;
  if (degree == 0) return SetPartition(0, {});
  return SetPartition(degree, {std::move(all)});
}

SetPartition parse_partition(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> parts(1);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("partition \"" + std::string(text) + "\": " + msg);
  };
  bool expect_point = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!expect_point) fail("missing separator");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) fail("point out of range 1.." + std::to_string(degree));
        ++pos;
      }
      if (value == 0) fail("point out of range 1.." + std::to_string(degree));
      parts.back().push_back(static_cast<Point>(value - 1));
      expect_point = false;
    } else if (c == ',' || c == '|') {
      if (expect_point) fail("empty entry");
      if (c == '|') parts.emplace_back();
      expect_point = true;
      ++pos;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (expect_point) fail("empty entry");
  try {
    return SetPartition(degree, std::move(parts));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  throw std::logic_error("unreachable");
}

std::string to_string(const SetPartition& parts) {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << '|';
    const auto& block = parts.part(k);
    for (std::size_t m = 0; m < block.size(); ++m) {
      if (m) os << ',';
      os << block[m] + 1;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SetPartition& parts) {
  return os << to_string(parts);
}

std::vector<SetPartition> all_partitions(std::size_t degree) {
  std::vector<SetPartition> result;
  if (degree == 0) {
    result.emplace_back(0, std::vector<std::vector<Point>>{});
    return result;
  }
  // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
  std::vector<std::size_t> label(degree, 0);
  std::vector<std::size_t> prefix_max(degree, 0);
  for (;;) {
    std::size_t blocks = prefix_max.back() + 1;
    std::vector<std::vector<Point>> parts(blocks);
    for (Point x = 0; x < degree; ++x) parts[label[x]].push_back(x);
    result.emplace_back(degree, std::move(parts));

    std::size_t i = degree - 1;
    while (i > 0 && label[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t k = i + 1; k < degree; ++k) {
      label[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return result;
}

}  // namespace permpoly
