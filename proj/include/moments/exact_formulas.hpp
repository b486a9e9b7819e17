#pragma once

#include <vector>

#include "moments/big_real.hpp"
#include "moments/errors.hpp"
#include "moments/rational.hpp"

namespace moments {

/// Working precision floor for the J* and closed-form evaluations.
inline constexpr unsigned kExactMinBits = 256;

/// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

/// z(x) = 1/(1 - e^{-x}); Laurent series near 0. PoleError on 2 pi i Z.
BigComplex z_eval(const BigComplex& x);
/// z'(x)
BigComplex z_prime(const BigComplex& x);
/// (z'/z)(x) = z(-x)
BigComplex z_log_derivative(const BigComplex& x);
/// (z'/z)'(x) = -z'(-x)
BigComplex z_log_derivative_prime(const BigComplex& x);

/// Average of prod_{j<=K} Z_X(e^{-alpha_j}) Z_{X*}(e^{alpha_{j+K}}) as a sum over
/// K-subsets. alphas has 2K entries. RemovableSingularity if a z argument vanishes.
BigComplex permutation_moment(const std::vector<BigComplex>& alphas, long N);

/// Same average with coincident shifts allowed: the shifts are spread by
/// multiples of h and the result is Richardson-extrapolated to h = 0.
BigComplex permutation_moment_limit(const std::vector<BigComplex>& alphas, long N);

/// Exact E|Z'(1)|^{2-2M} |Z(1)|^{2M} for K = 1 at finite N, M in {0, 1}.
Rational k1_mixed_moment_exact(long N, int M);

struct ShiftSets {
  std::vector<BigComplex> A;
  std::vector<BigComplex> B;
};

struct JStarTerms {
  BigComplex value;
  /// Largest modulus among the individual (S, T, partition) contributions.
  BigReal max_term;
};

/// Exact average of prod (-e^{-alpha}) Lambda'/Lambda(e^{-alpha}) times the
/// conjugate-side factors over B, as a finite subset/partition sum.
BigComplex j_star(const ShiftSets& sets, long N);
JStarTerms j_star_terms(const ShiftSets& sets, long N);

struct CoincidentReport {
  BigComplex value;
  /// Minimum over the perturbation levels of the digits agreeing between the
  /// working precision and 128 extra bits.
  double cancellation_digits = 0;
  /// Maximum over levels of log10(max term / |sum|).
  double digits_lost = 0;
  /// |extrapolated - last level| / |extrapolated|
  double extrapolation_change = 0;
};

/// J*(A; B) with A = B = {alpha, ..., alpha} (K copies), as a limit. K in {1, 2, 3}.
BigComplex j_star_coincident(int K, const BigComplex& alpha, long N, unsigned bits = kExactMinBits);
CoincidentReport j_star_coincident_report(int K, const BigComplex& alpha, long N, unsigned bits = kExactMinBits);

/// Closed forms for J* at A = B = {alpha,...} with K = 1, 2.
BigComplex section6_closed(int K, const BigComplex& alpha, long N);

}  // namespace moments
