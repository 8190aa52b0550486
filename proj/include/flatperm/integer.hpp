#pragma once

#include <string>

#include <gmpxx.h>

namespace flatperm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced num/den with den > 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(long n, long k);
Integer factorial(long n);
Integer pow2(long e);
Rational harmonic(long n);

}  // namespace flatperm
