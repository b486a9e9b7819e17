#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "moments/big_real.hpp"
#include "moments/errors.hpp"

namespace moments {

/// Eigenphases of one unitary matrix, each reduced to [0, 2 pi).
struct EigenAngles {
  std::vector<double> angles;
  std::size_t n() const { return angles.size(); }
};

/// Counter-based seed for sample `index` of a run keyed by `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-distributed spectrum: QR of a complex Ginibre matrix with the phases of
/// diag(R) pushed into Q, followed by a dense eigensolve.
EigenAngles sample_eigenangles(int n, std::uint64_t seed);

/// prod_j (1 - s e^{-i theta_j})
std::complex<double> lambda_at(const EigenAngles& spectrum, std::complex<double> s);
BigComplex lambda_at(const EigenAngles& spectrum, const BigComplex& s);

/// Lambda'/Lambda(s) = sum_j -e^{-i theta_j} / (1 - s e^{-i theta_j}). Throws PoleError on an eigenvalue.
std::complex<double> lambda_log_derivative(const EigenAngles& spectrum, std::complex<double> s);
BigComplex lambda_log_derivative(const EigenAngles& spectrum, const BigComplex& s);

struct ZValues {
  double z;                     // Z_X(1), real by construction
  std::complex<double> zprime;  // Z'_X(1)
};

/// Z_X(1) and Z'_X(1); throws std::logic_error if Im Z(1) exceeds 1e-9 |Z(1)|.
ZValues z_and_zprime(const EigenAngles& spectrum);

enum class MomentKind { abs_lambda_power, mixed_z, logderiv };

struct MomentSpec {
  MomentKind kind = MomentKind::abs_lambda_power;
  double power = 0;  // abs_lambda_power: |Lambda(1)|^power
  int K = 1;
  int M = 0;
  double a = 0;      // logderiv: evaluation point e^{-a/N}

  static MomentSpec abs_lambda_power(double p);
  /// |Z'(1)|^{2K-2M} |Z(1)|^{2M}
  static MomentSpec mixed_z(int K, int M);
  /// |Lambda'/Lambda(e^{-a/N})|^{2K}
  static MomentSpec logderiv(int K, double a);

  void validate() const;
};

struct MomentEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t pole_retries = 0;
};

/// Value of the observable on one spectrum of size n.
double observable(const MomentSpec& spec, const EigenAngles& spectrum);

/// Monte Carlo mean and standard error. The result depends only on (spec, n,
/// samples, seed); `workers` = 0 picks the hardware concurrency.
MomentEstimate estimate_moment(const MomentSpec& spec, int n, std::size_t samples, std::uint64_t seed,
                               unsigned workers = 0);

/// Pairwise summation, independent of how the values were produced.
double pairwise_sum(const double* values, std::size_t count);

}  // namespace moments
