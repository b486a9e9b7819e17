#pragma once

#include "moments/big_real.hpp"
#include "moments/rational.hpp"
#include "moments/series.hpp"

namespace moments {

struct BesselSeriesSpec {
  int K = 1;
  int M = 0;
  int terms = 0;
  /// throws std::invalid_argument unless 0 <= M <= K, K >= 1, terms >= 2K-2M+2
  void validate() const;
};

/// Series in x of x^{-K^2/2} det_{KxK}(I_{i+j-1}(2 sqrt x)) with `terms`
/// coefficients, built from x^{-nu/2} I_nu(2 sqrt x) = sum_m x^m / (m! (m+nu)!).
TruncatedSeries1 bessel_det_series(int K, int terms);

/// prod_{j<K} j! / (j+K)!
Rational keating_snaith_coeff(int K);

/// Leading constant c(K, M) of E|Z'(1)|^{2K-2M} |Z(1)|^{2M} ~ c N^{K^2+2K-2M}.
Rational theorem1_coefficient(int K, int M);

/// sigma(s) with sigma(4x) = -x F'(x)/F(x) - K^2, F proportional to e^{-x} times
/// the Bessel determinant series; `terms` coefficients in s.
TruncatedSeries1 sigma_series(int K, int terms);

inline constexpr int kPainleveTerms = 40;

/// |(s sigma'')^2 + sigma'(4 sigma' - 1)(sigma - s sigma') - K^2/16| for s in (0, 2].
double painleve_residual(int K, double s, int terms = kPainleveTerms);

/// The same constant as theorem1_coefficient, computed from sigma:
/// (-1)^{K-M} prod j!/(j+K)! (d/dx)^{2K-2M} [e^{x/2} exp(-int_0^{4x} (sigma(s)+K^2) ds/s)] at 0.
Rational theorem1_painleve_form(int K, int M);

}  // namespace moments
