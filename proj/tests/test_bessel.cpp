#include <doctest.h>

#include <cmath>
#include <vector>

#include "moments/bessel_painleve.hpp"
#include "moments/cue.hpp"
#include "oracles.hpp"

using namespace moments;

namespace {

// Coefficients of x^{-nu/2} I_nu(2 sqrt x), written out without the library series type.
std::vector<Rational> bessel_entry(int nu, int terms) {
  std::vector<Rational> c;
  for (int m = 0; m < terms; ++m) c.push_back(Rational(1) / Rational(factorial(m) * factorial(m + nu)));
  return c;
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// basic moment constant through Barnes G: G(K+1)^2 / G(2K+1).
double barnes_ratio(int K) {
  double log_g = 0;
  auto log_barnes = [](int n) {  // log G(n) = sum_{j<n-1} log j!
    double s = 0;
    for (int j = 1; j <= n - 2; ++j) s += std::lgamma(j + 1.0);
    return s;
  };
  log_g = 2 * log_barnes(K + 1) - log_barnes(2 * K + 1);
  return std::exp(log_g);
}

// Double-precision F(x) proportional to e^{-x} x^{-K^2/2} det I_{i+j-1}(2 sqrt x).
double bessel_f(int K, double x) {
  Matrix<double> m(static_cast<size_t>(K), std::vector<double>(static_cast<size_t>(K)));
  for (int i = 1; i <= K; ++i) {
    for (int j = 1; j <= K; ++j) m[i - 1][j - 1] = std::cyl_bessel_i(static_cast<double>(i + j - 1), 2 * std::sqrt(x));
  }
  return std::exp(-x) * std::pow(x, -K * K / 2.0) * oracle::leibniz_determinant(m, 1.0, 0.0);
}

}  // namespace

TEST_CASE("bessel determinant series matches hand expansions") {
  const TruncatedSeries1 k1 = bessel_det_series(1, 6);
  CHECK(k1.order() == 5);
  for (int m = 0; m <= 5; ++m) CHECK(k1[m] == bessel_entry(1, 6)[static_cast<size_t>(m)]);
  CHECK(k1[1] == make_rational(1, 2));
  CHECK(k1[2] == make_rational(1, 12));

  const int terms = 8;
  const auto i1 = bessel_entry(1, terms), i2 = bessel_entry(2, terms), i3 = bessel_entry(3, terms);
  const auto a = convolve(i1, i3), b = convolve(i2, i2);
  const TruncatedSeries1 k2 = bessel_det_series(2, terms);
  for (int m = 0; m < terms; ++m) CHECK(k2[m] == a[static_cast<size_t>(m)] - b[static_cast<size_t>(m)]);
  // (-1)^{K(K-1)/2} prod j!/(j+K)!
  CHECK(k2[0] == -keating_snaith_coeff(2));
  CHECK(bessel_det_series(3, 3)[0] == -keating_snaith_coeff(3));
  CHECK(bessel_det_series(4, 2)[0] == keating_snaith_coeff(4));
}

TEST_CASE("basic moment constants") {
  CHECK(keating_snaith_coeff(1) == Rational(1));
  CHECK(keating_snaith_coeff(2) == make_rational(1, 12));
  CHECK(keating_snaith_coeff(3) == make_rational(1, 8640));
  for (int K = 1; K <= 6; ++K) CHECK(to_double(keating_snaith_coeff(K)) == doctest::Approx(barnes_ratio(K)).epsilon(1e-12));
}

TEST_CASE("mixed moment leading constants") {
  CHECK(theorem1_coefficient(1, 1) == Rational(1));
  CHECK(theorem1_coefficient(1, 0) == make_rational(1, 12));
  CHECK(theorem1_coefficient(2, 2) == make_rational(1, 12));
  for (int K = 1; K <= 4; ++K) CHECK(theorem1_coefficient(K, K) == keating_snaith_coeff(K));
  for (int K = 1; K <= 4; ++K) {
    for (int M = 0; M <= K; ++M) CHECK(theorem1_coefficient(K, M) > 0);
  }
  CHECK_THROWS_AS(theorem1_coefficient(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_coefficient(2, -1), std::invalid_argument);
}

TEST_CASE("painleve form agrees with the bessel route") {
  CHECK(theorem1_painleve_form(1, 1) == Rational(1));
  CHECK(theorem1_painleve_form(1, 0) == make_rational(1, 12));
  for (int K = 1; K <= 3; ++K) {
    for (int M = 0; M <= K; ++M) {
      CAPTURE(K);
      CAPTURE(M);
      CHECK(theorem1_painleve_form(K, M) == theorem1_coefficient(K, M));
    }
  }
}

TEST_CASE("sigma series boundary data and convergence") {
  for (int K = 1; K <= 3; ++K) {
    const TruncatedSeries1 s = sigma_series(K, 10);
    CHECK(s[0] == Rational(-K * K));
    CHECK(s[1] == make_rational(1, 8));
  }
  const TruncatedSeries1 k1 = sigma_series(1, 4);
  CHECK(k1[2] == make_rational(1, 192));

  const BigReal half(0.5, 256);
  const BigReal a = sigma_series(1, 30).evaluate(half), b = sigma_series(1, 40).evaluate(half);
  CHECK(abs(a - b).to_double() < 1e-20);
}

TEST_CASE("sigma series matches finite differences of the bessel product") {
  for (int K = 1; K <= 3; ++K) {
    for (double s : {0.4, 1.0, 2.0}) {
      const double x = s / 4, h = 1e-4 * x;
      const double dlog = (std::log(std::abs(bessel_f(K, x + h))) - std::log(std::abs(bessel_f(K, x - h)))) / (2 * h);
      const double expected = -x * dlog - K * K;
      const double got = sigma_series(K, 40).evaluate(s);
      CAPTURE(K);
      CAPTURE(s);
      CHECK(got == doctest::Approx(expected).epsilon(1e-6));
    }
  }
}

TEST_CASE("painleve residual") {
  for (int K = 1; K <= 3; ++K) {
    for (double s : {0.1, 0.5, 1.0, 2.0}) {
      CAPTURE(K);
      CAPTURE(s);
      CHECK(painleve_residual(K, s) < 1e-10);
    }
  }
  CHECK(painleve_residual(1, 0.5) < 1e-12);
  CHECK(painleve_residual(2, 1e-6) < 1e-12);
  CHECK_THROWS_AS(painleve_residual(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(painleve_residual(1, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(painleve_residual(1, std::nan("")), std::invalid_argument);
  // a perturbed sigma is not a solution
  TruncatedSeries1 wrong = sigma_series(2, 40);
  wrong[3] += make_rational(1, 1000);
  const BigReal x(1.0, 256);
  const BigReal f = wrong.evaluate(x), f1 = series_derivative(wrong, 1).evaluate(x),
                f2 = series_derivative(wrong, 2).evaluate(x);
  const BigReal r = x * f2 * (x * f2) + f1 * (f1 * 4L - 1L) * (f - x * f1) - BigReal(make_rational(4, 16), 256);
  CHECK(abs(r).to_double() > 1e-6);
}

TEST_CASE("bessel series spec") {
  BesselSeriesSpec ok{2, 1, 4};
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS((BesselSeriesSpec{2, 1, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BesselSeriesSpec{2, 3, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BesselSeriesSpec{0, 0, 10}.validate()), std::invalid_argument);
}

// Finite-n moments from the Gamma-function product and the K = 1 derivative formula.
double exact_finite(int K, int M, int n) {
  if (K == 1 && M == 0) return n * (n + 1.0) * (n + 2.0) / 12.0;
  double log_v = 0;
  for (int j = 1; j <= n; ++j) log_v += std::lgamma(j) + std::lgamma(j + 2.0 * K) - 2 * std::lgamma(j + 1.0 * K);
  REQUIRE(K == M);
  return std::exp(log_v);
}

TEST_CASE("monte carlo moments approach the leading constants") {
  struct Case {
    int K, M;
    double correction;  // bound on n |exact(n)/(c n^p) - 1|
  };
  for (const Case c : {Case{1, 0, 4.0}, Case{1, 1, 2.0}, Case{2, 2, 10.0}}) {
    CAPTURE(c.K);
    CAPTURE(c.M);
    const double constant = to_double(theorem1_coefficient(c.K, c.M));
    const int p = c.K * c.K + 2 * c.K - 2 * c.M;
    // statistical part: sampled moments match the finite-n values
    for (int n : {6, 12}) {
      const MomentEstimate e = estimate_moment(MomentSpec::mixed_z(c.K, c.M), n, 6000, 4242 + n, 1);
      CAPTURE(n);
      CHECK(std::abs(e.mean - exact_finite(c.K, c.M, n)) < 5 * e.std_error);
    }
    // O(1/n) part: the scaled finite-n values settle on the constant
    double previous = INFINITY;
    for (int n : {50, 200, 800, 3200}) {
      const double deviation = std::abs(exact_finite(c.K, c.M, n) / std::pow(n, p) - constant);
      CAPTURE(n);
      CHECK(deviation < constant * c.correction / n);
      CHECK(deviation < previous);
      previous = deviation;
    }
  }
}
