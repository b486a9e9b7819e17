#include "moments/rational.hpp"

#include <stdexcept>

namespace moments {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? out : Integer(-out);
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("power: zero to a negative exponent");
    return power(Rational(1) / base, -exponent);
  }
  Rational out(1);
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace moments
