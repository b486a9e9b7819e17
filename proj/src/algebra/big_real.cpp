#include "moments/big_real.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace moments {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

unsigned checked_bits(unsigned bits) {
  if (bits < MPFR_PREC_MIN || bits > 1U << 20) throw std::invalid_argument("BigReal: unsupported precision");
  return bits;
}

unsigned max_bits(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

template <class Op>
BigReal binary(const BigReal& a, const BigReal& b, Op op) {
  BigReal out(max_bits(a, b));
  op(out.get(), a.get(), b.get(), kRound);
  return out;
}

template <class Op>
BigReal unary(const BigReal& x, Op op) {
  BigReal out(x.precision());
  op(out.get(), x.get(), kRound);
  return out;
}

}  // namespace

BigReal::BigReal(unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_d(value_, value, kRound);
}

BigReal::BigReal(long value, unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_si(value_, value, kRound);
}

BigReal::BigReal(const Rational& value, unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_string(const std::string& text, unsigned bits) {
  BigReal out(bits);
  if (mpfr_set_str(out.value_, text.c_str(), 10, kRound) != 0) {
    throw std::invalid_argument("BigReal: cannot parse '" + text + "'");
  }
  return out;
}

BigReal BigReal::pi(unsigned bits) {
  BigReal out(bits);
  mpfr_const_pi(out.value_, kRound);
  return out;
}

std::string BigReal::to_string(int significant_digits) const {
  char* raw = nullptr;
  const std::string format = "%." + std::to_string(std::max(1, significant_digits)) + "Rg";
  if (mpfr_asprintf(&raw, format.c_str(), value_) < 0) throw std::runtime_error("BigReal: formatting failed");
  std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(raw);
}

void BigReal::raise_precision(unsigned bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, kRound);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }

BigReal operator*(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_mul_si(out.get(), a.get(), b, kRound);
  return out;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_div_si(out.get(), a.get(), b, kRound);
  return out;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_add_si(out.get(), a.get(), b, kRound);
  return out;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_sub_si(out.get(), a.get(), b, kRound);
  return out;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_sub(out.get(), a, b.get(), kRound);
  return out;
}

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal expm1(const BigReal& x) { return unary(x, mpfr_expm1); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal atan2(const BigReal& y, const BigReal& x) { return binary(y, x, mpfr_atan2); }

BigReal pow(const BigReal& x, long exponent) {
  BigReal out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, kRound);
  return out;
}

BigReal pow(const BigReal& x, const BigReal& exponent) { return binary(x, exponent, mpfr_pow); }

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, kRound);
  return out;
}

long exponent2(const BigReal& x) { return x.is_zero() ? 0 : static_cast<long>(mpfr_get_exp(x.get())); }

// ---------------------------------------------------------------------------
// BigComplex

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  *this = *this / rhs;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) throw std::domain_error("BigComplex: division by zero");
  const BigReal denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re / b, a.im / b}; }
BigComplex operator*(const BigComplex& a, long b) { return {a.re * b, a.im * b}; }
BigComplex operator*(long a, const BigComplex& b) { return b * a; }
BigComplex operator+(const BigComplex& a, long b) { return {a.re + b, a.im}; }
BigComplex operator-(long a, const BigComplex& b) { return {a - b.re, -b.im}; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) {
  BigReal out(z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), kRound);
  return out;
}

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  const BigReal scale = exp(z.re);
  return {scale * cos(z.im), scale * sin(z.im)};
}

BigComplex expm1(const BigComplex& z) {
  if (z.im.is_zero()) return BigComplex(expm1(z.re));
  // Re: expm1(x) cos y - 2 sin^2(y/2);  Im: e^x sin y
  const BigReal half_sin = sin(ldexp(z.im, -1));
  BigReal real = expm1(z.re) * cos(z.im) - ldexp(half_sin * half_sin, 1);
  BigReal imag = exp(z.re) * sin(z.im);
  return {std::move(real), std::move(imag)};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("BigComplex: log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, long exponent) {
  if (exponent < 0) {
    BigComplex one(BigReal(1L, z.precision()));
    return pow(one / z, -exponent);
  }
  BigComplex out(BigReal(1L, z.precision()));
  BigComplex base = z;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

BigComplex unit_phasor(double theta, unsigned bits) {
  const BigReal t(theta, bits);
  return {cos(t), sin(t)};
}

}  // namespace moments
