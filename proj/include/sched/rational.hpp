#pragma once

#include <gmpxx.h>

#include <string>

namespace sched {

// All quantities in the simulation core are exact rationals. Times and
// durations share the representation; the aliases mark intent at call sites.
using Rational = mpq_class;
using Integer = mpz_class;
using Time = Rational;
using Duration = Rational;

/// Build a canonical rational from an integer numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Parse "p/q", plain integers, or decimal strings ("2.75") exactly.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Integer floor_to_int(const Rational& q);
Integer ceil_to_int(const Rational& q);

/// 2^k for any integer k (negative k gives 1/2^|k|).
Rational pow2(long k);

/// base^e for integer e (negative e inverts; base must be nonzero then).
Rational pow_int(const Rational& base, long e);

/// Largest integer l with base^l <= x, for base > 1 and x > 0.
/// Exact: exponential search plus binary search over integer exponents,
/// no floating-point logarithms anywhere.
long floor_log(const Rational& base, const Rational& x);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

/// floor(cbrt(n)) for n >= 0.
Integer icbrt_floor(const Integer& n);

}  // namespace sched
