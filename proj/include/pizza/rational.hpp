#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace pizza {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(t, u) in exact integer arithmetic, zero for u outside 0..t.
inline BigInt binomial(long t, long u) {
  if (t < 0) throw std::invalid_argument("binomial: row index must be nonnegative");
  if (u < 0 || u > t) return 0;
  if (u > t - u) u = t - u;
  BigInt result = 1;
  for (long i = 1; i <= u; ++i) {
    result *= t - u + i;
    result /= i;  // divides exactly at every step
  }
  return result;
}

/// C(1/2, j) as an exact rational, via C(1/2, j+1) = C(1/2, j) (1/2 - j)/(j + 1).
inline Rational half_binomial(long j) {
  if (j < 0) throw std::invalid_argument("half_binomial: index must be nonnegative");
  Rational c = 1;
  for (long k = 0; k < j; ++k) c *= Rational(1 - 2 * k, 2 * (k + 1));
  return c;
}

// num/den -> double, staying accurate when numerator and denominator are
// individually far outside double range: take a ~96-bit integer quotient,
// convert that, and rescale by the power of two that was shifted in. The
// fraction need not be in lowest terms.
inline double ratio_to_double(BigInt num, BigInt den) {
  if (num == 0) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  if (num < 0) num = -num;
  if (den < 0) den = -den;
  const long diff = static_cast<long>(boost::multiprecision::msb(num)) -
                    static_cast<long>(boost::multiprecision::msb(den));
  const long shift = 96 - diff;
  if (shift > 0)
    num <<= shift;
  else
    den <<= -shift;
  const double quotient = (num / den).convert_to<double>();
  const double value = std::ldexp(quotient, static_cast<int>(-shift));
  return negative ? -value : value;
}

inline double to_double(const Rational& r) {
  return ratio_to_double(boost::multiprecision::numerator(r),
                         boost::multiprecision::denominator(r));
}

}  // namespace pizza
