#pragma once

#include "moments/big_real.hpp"
#include "moments/matrix.hpp"
#include "moments/rational.hpp"
#include "moments/series.hpp"

namespace moments {

/// Exact determinant by fraction-free (Bareiss) elimination over the integers
/// after clearing row denominators.
Rational exact_determinant(const Matrix<Rational>& matrix);

/// Determinant over the truncated series ring. Uses division-free minor
/// expansion memoized over column subsets, so sizes up to about 16 are fine.
TruncatedSeries2 series_determinant(const Matrix<TruncatedSeries2>& matrix);
TruncatedSeries1 series_determinant(const Matrix<TruncatedSeries1>& matrix);

/// Gaussian elimination with partial pivoting at the entries' precision.
BigComplex complex_determinant(Matrix<BigComplex> matrix);

}  // namespace moments
