#pragma once

#include <gmpxx.h>

#include <string>

#include "matsuo/errors.hpp"

namespace matsuo {

/// Arbitrary-precision rational, always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders a rational as "p" (when the denominator is 1) or "p/q".
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

namespace detail {
inline Integer parse_integer(const std::string& s, const std::string& full) {
  if (s.empty()) throw ParseError("empty integer in rational '" + full + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bare sign in rational '" + full + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError("bad character '" + std::string(1, s[i]) +
                       "' in rational '" + full + "'");
    }
  }
  return Integer(s, 10);
}
}  // namespace detail

/// Parses "p" or "p/q" (optional leading sign, q > 0 after canonicalization).
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(detail::parse_integer(s, text));
  }
  if (s.find('/', slash + 1) != std::string::npos) {
    throw ParseError("multiple '/' in rational '" + text + "'");
  }
  Integer num = detail::parse_integer(s.substr(0, slash), text);
  Integer den = detail::parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Convenience for literals in tests and tables.
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace matsuo
