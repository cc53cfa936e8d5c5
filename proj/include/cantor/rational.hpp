#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "cantor/error.hpp"

namespace cantor {

/// Exact rational scalar. Expression templates are disabled so `auto`
/// never captures a dangling expression.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// base^exp for a non-negative exponent.
inline Rational pow(const Rational& base, std::uint64_t exp) {
  Rational result = 1;
  Rational b = base;
  while (exp != 0) {
    if ((exp & 1U) != 0) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

/// 2^{-k} as an exact rational.
inline Rational pow2_inv(unsigned k) {
  Integer den = 1;
  den <<= k;
  return Rational(Integer(1), den);
}

/// Canonical "p/q" form: gcd(p, q) = 1, q > 0; integers still carry "/1".
inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p/q" or a bare integer "p". Decimal points are rejected.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(s.empty() || s[0] != '+' ? s : s.substr(1));
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_int(num_text)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer num(strip_plus(num_text));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_int(den_text)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    den = Integer(strip_plus(den_text));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace cantor
