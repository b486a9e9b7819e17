#include "moments/bessel_painleve.hpp"

#include <stdexcept>

#include "moments/determinant.hpp"

namespace moments {

namespace {

void require_km(int K, int M) {
  if (K < 0 || M < 0 || M > K) throw std::invalid_argument("need 0 <= M <= K");
}

Rational inverse_factorial(long n) { return Rational(1) / Rational(factorial(static_cast<unsigned long>(n))); }

int sign_power(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

void BesselSeriesSpec::validate() const {
  if (K < 1) throw std::invalid_argument("BesselSeriesSpec: K must be positive");
  require_km(K, M);
  if (terms < 2 * K - 2 * M + 2) throw std::invalid_argument("BesselSeriesSpec: too few terms");
}

TruncatedSeries1 bessel_det_series(int K, int terms) {
  if (K < 1) throw std::invalid_argument("bessel_det_series: K must be positive");
  if (terms < 1) throw std::invalid_argument("bessel_det_series: need at least one term");
  const int order = terms - 1;
  std::vector<TruncatedSeries1> g;
  for (int nu = 0; nu <= 2 * K - 1; ++nu) {
    TruncatedSeries1 s(order);
    for (int m = 0; m <= order; ++m) s[m] = inverse_factorial(m) * inverse_factorial(m + nu);
    g.push_back(std::move(s));
  }
  Matrix<TruncatedSeries1> matrix(static_cast<size_t>(K));
  for (int i = 1; i <= K; ++i) {
    for (int j = 1; j <= K; ++j) matrix[static_cast<size_t>(i - 1)].push_back(g[static_cast<size_t>(i + j - 1)]);
  }
  return series_determinant(matrix);
}

Rational keating_snaith_coeff(int K) {
  if (K < 0) throw std::invalid_argument("keating_snaith_coeff: K must be nonnegative");
  Rational out = 1;
  for (int j = 0; j < K; ++j) out *= Rational(factorial(static_cast<unsigned long>(j))) * inverse_factorial(j + K);
  return out;
}

Rational theorem1_coefficient(int K, int M) {
  require_km(K, M);
  if (K == 0) return 1;
  const int d = 2 * K - 2 * M;
  const TruncatedSeries1 product = TruncatedSeries1::exponential(make_rational(-1, 2), d) * bessel_det_series(K, d + 1);
  const int sign = sign_power(K * (K - 1) / 2 + K - M);
  return Rational(factorial(static_cast<unsigned long>(d))) * product[d] * sign;
}

TruncatedSeries1 sigma_series(int K, int terms) {
  if (K < 1) throw std::invalid_argument("sigma_series: K must be positive");
  if (terms < 1) throw std::invalid_argument("sigma_series: need at least one term");
  const int order = terms - 1;
  const TruncatedSeries1 b = bessel_det_series(K, terms + 1);
  // x B'/B, order `order`
  const TruncatedSeries1 log_derivative = series_derivative(b, 1) * series_inverse(b.truncated(order));
  TruncatedSeries1 sigma(order);
  sigma[0] = -K * K;
  for (int n = 1; n <= order; ++n) {
    Rational xn = -log_derivative[n - 1];
    if (n == 1) xn += 1;
    sigma[n] = xn / power(Rational(4), n);
  }
  return sigma;
}

double painleve_residual(int K, double s, int terms) {
  if (!(s > 0.0 && s <= 2.0)) throw std::invalid_argument("painleve_residual: s must lie in (0, 2]");
  const unsigned bits = 256;
  const TruncatedSeries1 sigma = sigma_series(K, terms);
  const BigReal x(s, bits);
  const BigReal f = sigma.evaluate(x);
  const BigReal f1 = series_derivative(sigma, 1).evaluate(x);
  const BigReal f2 = series_derivative(sigma, 2).evaluate(x);
  const BigReal sf2 = x * f2;
  const BigReal residual =
      sf2 * sf2 + f1 * (f1 * 4L - 1L) * (f - x * f1) - BigReal(make_rational(K * K, 16), bits);
  return abs(residual).to_double();
}

Rational theorem1_painleve_form(int K, int M) {
  require_km(K, M);
  if (K == 0) return 1;
  const int d = 2 * K - 2 * M;
  const TruncatedSeries1 sigma = sigma_series(K, d + 1);
  // L(x) = -int_0^{4x} (sigma(s) + K^2) ds / s = -sum_{n>=1} sigma_n 4^n x^n / n
  TruncatedSeries1 exponent(d);
  for (int n = 1; n <= d; ++n) exponent[n] = -sigma[n] * power(Rational(4), n) / n;
  const TruncatedSeries1 inner = TruncatedSeries1::exponential(make_rational(1, 2), d) * series_exp(exponent);
  return keating_snaith_coeff(K) * Rational(factorial(static_cast<unsigned long>(d))) * inner[d] * sign_power(K - M);
}

}  // namespace moments
