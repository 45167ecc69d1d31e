#pragma once

#include <gmpxx.h>

#include <string>

namespace sl4cube {

// GMP values are always kept canonical (reduced, positive denominator)
// by the gmpxx operators.
using Integer = mpz_class;
using Rational = mpq_class;

// a/b in lowest terms; the two-argument mpq_class constructor does not reduce.
Rational ratio(long a, long b);

Rational factorial(long n);

// C(n, k) for 0 <= k <= n, zero otherwise.
Rational binomial(long n, long k);

// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
Rational pochhammer(const Rational& a, long n);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace sl4cube
