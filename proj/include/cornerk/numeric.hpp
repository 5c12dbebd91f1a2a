#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>

#include "cornerk/error.hpp"

namespace cornerk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Quotient q minimizing |a - q*b| (ties resolved toward the truncated
/// quotient). Keeps remainders at most |b|/2 during elimination, which is
/// what bounds entry growth in the Smith reduction.
inline Int div_round_nearest(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) {
    q += (r > 0) == (b > 0) ? 1 : -1;
  }
  return q;
}

inline std::string format_rational(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p", "p/q", or a plain decimal such as "-1.25" into an exact
/// rational. Decimal inputs stay exact (0.1 becomes 1/10).
inline Rat parse_rational(const std::string& text,
                          const std::string& error_code = "numeric.parse_rational") {
  const auto bad = [&]() -> Rat {
    fail(error_code, "malformed rational literal: '" + text + "'", ErrorKind::parse);
  };
  if (text.empty()) bad();
  std::string body = text;
  if (body.front() == '+') body.erase(0, 1); // cpp_int rejects a leading '+'
  if (body.empty()) bad();

  const auto slash = body.find('/');
  try {
    if (slash != std::string::npos) {
      if (slash == 0 || slash + 1 >= body.size()) bad();
      const Int num(body.substr(0, slash));
      const Int den(body.substr(slash + 1));
      if (den == 0) bad();
      return Rat(num, den);
    }
    const auto dot = body.find('.');
    if (dot == std::string::npos) {
      return Rat(Int(body));
    }
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    const std::size_t frac_digits = body.size() - dot - 1;
    if (frac_digits == 0 || digits.empty() || digits == "-" || digits == "+") bad();
    Int den = 1;
    for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
    return Rat(Int(digits), den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0); // unreachable
}

} // namespace cornerk
