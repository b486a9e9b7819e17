#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "moments/rational.hpp"

namespace moments {

/// Binary floating-point scalar with an explicit precision in bits.
///
/// The precision is fixed at construction. Binary operations produce a result
/// at the larger precision of the two operands, so mixing precisions never
/// rounds a value down. Compound assignment raises the left operand's
/// precision when the right operand carries more bits.
class BigReal {
 public:
  static constexpr unsigned kDefaultBits = 256;

  explicit BigReal(unsigned bits = kDefaultBits);
  BigReal(double value, unsigned bits);
  BigReal(long value, unsigned bits);
  BigReal(int value, unsigned bits) : BigReal(static_cast<long>(value), bits) {}
  BigReal(const Rational& value, unsigned bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal string such as "0.1" or "1e-30" at the given precision.
  static BigReal from_string(const std::string& text, unsigned bits);
  static BigReal pi(unsigned bits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int significant_digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal operator-() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void raise_precision(unsigned bits);
  mpfr_t value_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);

bool operator<(const BigReal& a, const BigReal& b);
bool operator>(const BigReal& a, const BigReal& b);
bool operator<=(const BigReal& a, const BigReal& b);
bool operator>=(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, const BigReal& b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, long exponent);
BigReal pow(const BigReal& x, const BigReal& exponent);
/// Scales by 2^e exactly.
BigReal ldexp(const BigReal& x, long e);
/// Base-2 exponent e with |x| in [2^(e-1), 2^e); meaningless for zero.
long exponent2(const BigReal& x);

/// Complex companion of BigReal; precision is the larger of the two parts.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(unsigned bits = BigReal::kDefaultBits) : re(bits), im(bits) {}
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit BigComplex(BigReal real) : re(std::move(real)), im(re.precision()) {}
  BigComplex(std::complex<double> z, unsigned bits) : re(z.real(), bits), im(z.imag(), bits) {}

  unsigned precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex operator-() const { return {-re, -im}; }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigComplex& a, long b);
BigComplex operator*(long a, const BigComplex& b);
BigComplex operator+(const BigComplex& a, long b);
BigComplex operator-(long a, const BigComplex& b);

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// exp(z) - 1 without cancellation for small |z|.
BigComplex expm1(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long exponent);
/// e^{i theta} at the requested precision.
BigComplex unit_phasor(double theta, unsigned bits);

}  // namespace moments
