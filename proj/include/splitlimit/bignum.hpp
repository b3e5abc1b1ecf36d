#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace splitlimit {

// Exact integer and rational arithmetic, GMP-backed.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Software floating point with runtime-selectable precision, MPFR-backed.
// Precision is a process-wide default measured in decimal digits; helpers
// below speak bits of mantissa, which is how callers think about it.
using BigFloat = boost::multiprecision::mpfr_float;

inline int bits_to_digits10(int bits) {
  // ceil(bits * log10(2)) plus a couple of guard digits
  return static_cast<int>(bits * 0.30103) + 3;
}

inline void set_float_precision_bits(int bits) {
  BigFloat::default_precision(bits_to_digits10(bits));
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

inline Int double_factorial_odd(int m) {
  // (2k-3)!! style products; m <= 1 gives 1
  Int r = 1;
  for (int i = m; i >= 3; i -= 2) r *= i;
  return r;
}

}  // namespace splitlimit
