#pragma once

#include <gmpxx.h>

#include <string>

namespace moments {

// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) through every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

Integer factorial(unsigned long n);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
/// Returns 0 for k < 0.
Integer binomial(long n, long k);

Rational power(const Rational& base, long exponent);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace moments
