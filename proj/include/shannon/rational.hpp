#pragma once

#include <gmpxx.h>

#include <string>

namespace shannon {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// "p/q", including "n/1" for integers.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace shannon
