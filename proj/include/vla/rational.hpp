#ifndef VLA_RATIONAL_HPP
#define VLA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "vla/errors.hpp"

namespace vla {

/// Exact rational scalar.  GMP keeps values in lowest terms with a positive
/// denominator, which is exactly the canonical form we serialize.
using Rational = mpq_class;

inline Rational rational(long long num, long long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// Canonical string form: "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (base 10).  Rejects anything else.
inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

}  // namespace vla

#endif
