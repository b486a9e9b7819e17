#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "moments/errors.hpp"
#include "moments/matrix.hpp"

namespace moments {

using cplx = std::complex<double>;

struct WeightParams {
  double a = 0;
  double t1 = 0;
  double t2 = 0;
  int K = 1;
  void validate() const;
};

struct MultiIndex {
  int n1 = 0;
  int n2 = 0;
  int size() const { return n1 + n2; }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

inline constexpr int kQuadratureStartNodes = 256;
inline constexpr int kQuadratureMaxNodes = 1 << 16;
inline constexpr double kQuadratureTolerance = 1e-13;
/// Working precision for moment determinants.
inline constexpr unsigned kHankelBits = 128;
/// |Delta| below this is treated as degenerate.
inline constexpr double kDegenerateDelta = 1e-10;

/// (1/2 pi i) \oint_{|u|=2} f(u) du for several integrands sharing nodes. The
/// periodic trapezoid rule is doubled from 256 nodes until every component
/// changes by less than 1e-13 relative to max(|value|, mean |f u|).
/// ConvergenceError after 2^16 nodes.
std::vector<cplx> circle_integrals(const std::function<void(cplx u, std::vector<cplx>& out)>& f, int count);
cplx circle_integral(const std::function<cplx(cplx)>& f);

/// w^(1)(u) = e^{au/2 + t1/(u-1) + t2/(u+1)} / (u-1)^K, w^(2) with -a and (u+1)^K.
cplx weight(int j, cplx u, const WeightParams& p);

/// mu_l^(j) = (1/2 pi i) \oint u^l w^(j)(u) du
cplx weight_moment(int j, int l, const WeightParams& p);

/// mu_0..mu_max_l for both weights from one quadrature run: [j-1][l].
std::array<std::vector<cplx>, 2> weight_moments(int max_l, const WeightParams& p);

/// Rows mu^(1)_{i+l} (i < n1) then mu^(2)_{i+l} (i < n2), columns l < |n|.
Matrix<cplx> moment_matrix(const MultiIndex& n, const WeightParams& p);

/// det of moment_matrix at 128 bits; Delta_(0,0) = 1.
cplx hankel_delta(const MultiIndex& n, const WeightParams& p);

/// Row (and column) order taking the Delta_(K,K) matrix to block Hankel form
/// with 2x2 blocks: position p*K + j goes to 2j + p.
std::vector<int> block_hankel_permutation(int K);
int permutation_sign(const std::vector<int>& perm);
/// [a_{j+k}] with a_m = (1/2 pi i) \oint u^m w(u) du for the 2x2 symbol with columns (1, u^K).
Matrix<cplx> block_hankel_matrix(const WeightParams& p);

/// Coefficients (constant first) of the monic type II polynomial P_n.
/// DegenerateDeterminant if |Delta_n| < 1e-10.
std::vector<cplx> mop_coefficients(const MultiIndex& n, const WeightParams& p);
cplx evaluate_polynomial(const std::vector<cplx>& coefficients, cplx u);

/// max over j and l < n_j of |(1/2 pi i) \oint P_n u^l w^(j)|, integrated directly.
double mop_orthogonality_residual(const MultiIndex& n, const WeightParams& p);

struct GammaEntries {
  cplx g12;  // -(1/2 pi i) \oint u^{n1} P_n w^(1)
  cplx g13;  // -(1/2 pi i) \oint u^{n2} P_n w^(2)
  cplx b1;   // -1 / (1/2 pi i) \oint u^{n1-1} P_{n-e1} w^(1), zero if n1 = 0
  cplx b2;
};

/// Entries of gamma^(1)_n from the polynomials and Cauchy-type integrals.
GammaEntries gamma_entries(const MultiIndex& n, const WeightParams& p);

/// Max deviation of gamma_entries from the determinant ratios, measured as
/// |x - y| / max(1, |y|).
/// DegenerateDeterminant if Delta_n, Delta_{n-e1}, Delta_{n-e2} vanish.
double gamma_recurrence_residual(const MultiIndex& n, const WeightParams& p);

/// prod_{j=1}^K (-1)^j (gamma_(j-1,j))_12 / (gamma_(j-1,j))_31
/// DegenerateDeterminant names the first vanishing intermediate index.
cplx product_formula_delta(const WeightParams& p);
/// The same as a limit in a, for points where an intermediate Delta vanishes
/// (e.g. Delta_(0,1) = 0 at the origin for K >= 2): Richardson extrapolation of
/// symmetric means at a +- h, a +- h/2, a +- h/4.
cplx product_formula_delta_limit(const WeightParams& p, double h = 0.05);

/// R^(j)_0(u) = (1/2 pi i) \oint w^(j)(v) / (v - u) dv, u off the circle.
cplx cauchy_transform(int j, cplx u, const WeightParams& p);

/// |R(u-) - R(u+) - w(2 e^{i phase})| at u+- = (2 +- delta) e^{i phase}, per weight.
std::array<double, 2> plemelj_jump_residuals(const WeightParams& p, double phase, double delta);
double plemelj_jump_residual(const WeightParams& p, double phase, double delta);

/// exp(-Ka + K(t2 - t1)/6 - t1 t2/6)
double tau_zero(const WeightParams& p);
/// tau_(K,K) recovered from Delta_(K,K) through the tau/Hankel relation.
cplx tau_kk_from_delta(const WeightParams& p);

struct TauOriginReport {
  double tau_zero_residual = 0;   // |tau_0(0,0,0) - 1|
  double delta_residual = 0;      // |Delta_(K,K)(0,0,0) / (-2)^{K^2} - 1|
  cplx tau_kk{};                  // tau_(K,K)(0,0,0), should be 1
};

/// K <= 3
TauOriginReport tau_relations_at_origin(int K);

}  // namespace moments
