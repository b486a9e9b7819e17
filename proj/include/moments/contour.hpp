#pragma once

#include <vector>

#include "moments/matrix.hpp"
#include "moments/rational.hpp"
#include "moments/series.hpp"

namespace moments {

/// I(r, E, G) = (1/2 pi i) \oint_{|u|=2} u^r e^{t1/(u-1) + t2/(u+1)} / ((u-1)^E (u+1)^G) du
struct IntegralIndex {
  long r = 0;
  int E = 0;
  int G = 0;

  long degree() const { return r - E - G; }
  void validate() const;
  friend bool operator==(const IntegralIndex&, const IntegralIndex&) = default;
};

/// I at t1 = t2 = 0: residues at 1, -1 and (for r < 0) at 0.
Rational residue_integral(const IntegralIndex& idx);

/// sum_{m+n<=cap} t1^m t2^n / (m! n!) I(r, E+m, G+n)
TruncatedSeries2 i_series(const IntegralIndex& idx, int cap);

/// Square matrix of integrals I(r_i + c_j, e_i + E_j, g_i + G_j). With e = g = 0
/// this is the usual class of matrices with column-only denominators; the row
/// offsets on E and G also cover the two-halved matrices built by lemma2_matrix.
struct ClassMMatrix {
  std::vector<long> row_r;
  std::vector<int> row_e;
  std::vector<int> row_g;
  std::vector<long> col_c;
  std::vector<int> col_E;
  std::vector<int> col_G;

  int size() const { return static_cast<int>(row_r.size()); }
  IntegralIndex entry(int i, int j) const;
  /// invalid_argument on ragged sizes or negative orders
  void validate() const;

  /// Recovers the separable structure from a grid; invalid_argument if the
  /// exponents are not of the form row offset + column offset.
  static ClassMMatrix from_indices(const Matrix<IntegralIndex>& grid);
  Matrix<IntegralIndex> indices() const;
};

struct DegreeProfile {
  std::vector<long> column_degrees;
  long total = 0;
  /// columns with D_J <= -2, which vanish identically
  std::vector<int> zero_columns;
};

DegreeProfile degree_profile(const ClassMMatrix& m);
DegreeProfile degree_profile(const Matrix<IntegralIndex>& grid);

/// sum_{d=-1}^{n-2} d, the smallest total degree of a nonvanishing n x n determinant (2K^2 - 3K for n = 2K).
long minimal_nonzero_degree(int n);

/// Determinant of the matrix of i_series entries.
TruncatedSeries2 class_m_determinant(const ClassMMatrix& m, int cap);
/// The same at t1 = t2 = 0, as a plain rational determinant.
Rational class_m_value(const ClassMMatrix& m);

struct SignedMatrix {
  int sign = 1;
  ClassMMatrix matrix;
};

/// Column J and J' have equal degree. Rewrites column J with the recursions
/// until it coincides with column J'; det m is then the signed sum of the
/// determinants of the returned matrices, each of lower total degree.
std::vector<SignedMatrix> reduce_equal_columns(const ClassMMatrix& m, int J, int J_prime);

enum class Lemma2Variant { rowK, row2K };

ClassMMatrix lemma1_matrix(int K);
ClassMMatrix lemma2_matrix(int K, Lemma2Variant variant);
/// Columns of lemma2_matrix differentiated m_j times in t1 and n_j times in t2.
ClassMMatrix differentiated_matrix(int K, Lemma2Variant variant, const std::vector<int>& m, const std::vector<int>& n);

/// cap >= 2
TruncatedSeries2 lemma1_determinant(int K, int cap);
/// cap fixed at 2K + 1
TruncatedSeries2 lemma2_determinant(int K, Lemma2Variant variant);
/// +-binom(2K-2, K-1) 2^{(K-1)^2} / (a! b!)
Rational lemma2_leading_coefficient(int K, Lemma2Variant variant, int a, int b);

/// 2K x 2K block binomial matrix whose determinant is (-2)^{K^2}.
Matrix<Rational> binomial_matrix(int K);

/// 2K x 2K matrix with entries 1/(j+1-i)! for i <= j+1.
Matrix<Rational> c_matrix(int K);
Rational c_matrix_determinant(int K);

/// One permutation in the signed multiplicity sum behind det C_{2K}.
struct FinalIdentityRow {
  std::vector<int> column_degrees;
  std::vector<int> sigma;  // 1-based
  std::vector<int> p;
  int sign = 1;
  Integer multiplicity;
};

/// Permutations of 1..2K with sigma_j <= j+1, in lexicographic order.
std::vector<FinalIdentityRow> final_identity_table(int K);

/// binom(2K-2, K-1) N^{2K} / (2a)^{2K-1}
double theorem2_value(int K, double a, double N);

}  // namespace moments
