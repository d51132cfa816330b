#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "eucdom/error.hpp"

namespace eucdom {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// "p/q" with q > 0 and gcd(p, q) = 1; "/q" dropped when q = 1.
inline std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p" or "p/q". Throws std::invalid_argument on anything else,
/// including a zero denominator. The result is always in lowest terms.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::is_decimal_integer(num_text) || !detail::is_decimal_integer(den_text) ||
      den_text.front() == '-' || den_text.front() == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  const Integer num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
  const Integer den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace eucdom
