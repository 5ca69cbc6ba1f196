#pragma once

#include <gmpxx.h>

#include <string>

namespace pickwick {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

BigInt factorial(unsigned n);

}  // namespace pickwick
