#include "permpoly/rational.hpp"

#include <cctype>
#include <string>

#include "permpoly/errors.hpp"

namespace permpoly {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* msg) -> Rational {
    throw ParseError("rational \"" + std::string(text) + "\": " + msg);
  };
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) return fail("expected p or p/q");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) return fail("zero denominator");
  if (negative) p = -p;
  return Rational(p, q);
}

}  // namespace permpoly
