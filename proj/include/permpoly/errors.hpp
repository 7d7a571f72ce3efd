#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

/// Malformed textual input: cycle notation, partitions, rationals, group specs.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two objects that must share a degree do not.
class DegreeMismatch : public std::invalid_argument {
 public:
  explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A face test was asked about a set that is not a subgroup of the ambient group.
class NotASubgroup : public std::invalid_argument {
 public:
  explicit NotASubgroup(const std::string& what) : std::invalid_argument(what) {}
};

/// A configurable size guard (closure, enumeration, LP) was hit.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace permpoly
