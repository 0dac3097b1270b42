#ifndef ORBICHI_RATIONAL_HPP
#define ORBICHI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "orbichi/errors.hpp"

namespace orbichi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or plain "n" when it is integral.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or "n". Whitespace is not accepted.
inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInput("not a rational: '" + s + "'");
  }
}

/// Extracts an integer from a rational known to be integral.
inline Integer as_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1)
    throw NonIntegerResult(std::string(what) + " is not an integer: " +
                           rational_to_string(r));
  return numerator(r);
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace orbichi

#endif
