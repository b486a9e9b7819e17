#include "moments/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "moments/determinant.hpp"

namespace moments {

namespace {

Rational two_power(long e) { return power(Rational(2), e); }

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

Rational inverse_factorial(long n) { return Rational(1) / Rational(factorial(static_cast<unsigned long>(n))); }

void require_positive_order(int K, const char* where) {
  if (K < 1) throw std::invalid_argument(std::string(where) + ": K must be positive");
}

// coefficient of (u-1)^{E-1} in u^r (u+1)^{-G}
Rational residue_at_one(long r, int E, int G) {
  Rational total = 0;
  for (long k = 0; k < E; ++k) {
    const long l = E - 1 - k;
    total += Rational(binomial(r, k)) * Rational(binomial(-G, l)) * two_power(-G - l);
  }
  return total;
}

// with w = u + 1: coefficient of w^{G-1} in (-1)^r (1-w)^r (-2)^{-E} (1-w/2)^{-E}
Rational residue_at_minus_one(long r, int E, int G) {
  Rational total = 0;
  for (long k = 0; k < G; ++k) {
    const long l = G - 1 - k;
    // (1-w)^r -> binom(r,k) (-1)^k; (1-w/2)^{-E} -> binom(E+l-1, l) 2^{-l}
    total += Rational(binomial(r, k)) * parity_sign(k) * Rational(binomial(E + l - 1, l)) * two_power(-l);
  }
  return total * parity_sign(r) * parity_sign(E) * two_power(-E);
}

// r < 0: coefficient of u^{-r-1} in (u-1)^{-E} (u+1)^{-G}
Rational residue_at_zero(long r, int E, int G) {
  const long target = -r - 1;
  Rational total = 0;
  for (long k = 0; k <= target; ++k) {
    const long l = target - k;
    total += Rational(binomial(E + k - 1, k)) * Rational(binomial(-G, l));
  }
  return total * parity_sign(E);
}

}  // namespace

void IntegralIndex::validate() const {
  if (E < 0 || G < 0) throw std::invalid_argument("IntegralIndex: E and G must be nonnegative");
}

Rational residue_integral(const IntegralIndex& idx) {
  idx.validate();
  if (idx.E + idx.G >= idx.r + 2) return 0;
  Rational total = 0;
  if (idx.E > 0) total += residue_at_one(idx.r, idx.E, idx.G);
  if (idx.G > 0) total += residue_at_minus_one(idx.r, idx.E, idx.G);
  if (idx.r < 0) total += residue_at_zero(idx.r, idx.E, idx.G);
  return total;
}

TruncatedSeries2 i_series(const IntegralIndex& idx, int cap) {
  idx.validate();
  if (cap < 0) throw std::invalid_argument("i_series: cap must be nonnegative");
  TruncatedSeries2 out(cap);
  for (int m = 0; m <= cap; ++m) {
    for (int n = 0; m + n <= cap; ++n) {
      const Rational value = residue_integral({idx.r, idx.E + m, idx.G + n});
      if (value != 0) out.add_term(m, n, value * inverse_factorial(m) * inverse_factorial(n));
    }
  }
  return out;
}

IntegralIndex ClassMMatrix::entry(int i, int j) const {
  const auto si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
  return {row_r[si] + col_c[sj], row_e[si] + col_E[sj], row_g[si] + col_G[sj]};
}

void ClassMMatrix::validate() const {
  const size_t n = row_r.size();
  if (n == 0) throw std::invalid_argument("ClassMMatrix: empty");
  if (row_e.size() != n || row_g.size() != n || col_c.size() != n || col_E.size() != n || col_G.size() != n) {
    throw std::invalid_argument("ClassMMatrix: offset vectors must all have the matrix size");
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) entry(i, j).validate();
  }
}

ClassMMatrix ClassMMatrix::from_indices(const Matrix<IntegralIndex>& grid) {
  if (grid.empty() || !is_square(grid)) throw std::invalid_argument("ClassMMatrix: grid must be square");
  const size_t n = grid.size();
  ClassMMatrix m;
  // row offsets relative to column 0, column offsets taken from row 0
  for (size_t i = 0; i < n; ++i) {
    m.row_r.push_back(grid[i][0].r - grid[0][0].r);
    m.row_e.push_back(grid[i][0].E - grid[0][0].E);
    m.row_g.push_back(grid[i][0].G - grid[0][0].G);
  }
  for (size_t j = 0; j < n; ++j) {
    m.col_c.push_back(grid[0][j].r);
    m.col_E.push_back(grid[0][j].E);
    m.col_G.push_back(grid[0][j].G);
  }
  // normalize so that all row offsets on E and G are nonnegative
  const int min_e = *std::min_element(m.row_e.begin(), m.row_e.end());
  const int min_g = *std::min_element(m.row_g.begin(), m.row_g.end());
  for (auto& e : m.row_e) e -= min_e;
  for (auto& g : m.row_g) g -= min_g;
  for (auto& E : m.col_E) E += min_e;
  for (auto& G : m.col_G) G += min_g;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!(m.entry(static_cast<int>(i), static_cast<int>(j)) == grid[i][j])) {
        throw std::invalid_argument("ClassMMatrix: exponents are not row offset + column offset at (" +
                                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }
  m.validate();
  return m;
}

Matrix<IntegralIndex> ClassMMatrix::indices() const {
  Matrix<IntegralIndex> grid(static_cast<size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) grid[static_cast<size_t>(i)].push_back(entry(i, j));
  }
  return grid;
}

DegreeProfile degree_profile(const ClassMMatrix& m) {
  m.validate();
  DegreeProfile p;
  for (int j = 0; j < m.size(); ++j) {
    long best = m.entry(0, j).degree();
    for (int i = 1; i < m.size(); ++i) best = std::max(best, m.entry(i, j).degree());
    p.column_degrees.push_back(best);
    p.total += best;
    if (best <= -2) p.zero_columns.push_back(j);
  }
  return p;
}

DegreeProfile degree_profile(const Matrix<IntegralIndex>& grid) { return degree_profile(ClassMMatrix::from_indices(grid)); }

long minimal_nonzero_degree(int n) {
  if (n < 1) throw std::invalid_argument("minimal_nonzero_degree: n must be positive");
  return static_cast<long>(n - 2) * (n - 1) / 2 - 1;
}

TruncatedSeries2 class_m_determinant(const ClassMMatrix& m, int cap) {
  m.validate();
  Matrix<TruncatedSeries2> series(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) series[static_cast<size_t>(i)].push_back(i_series(m.entry(i, j), cap));
  }
  return series_determinant(series);
}

Rational class_m_value(const ClassMMatrix& m) {
  m.validate();
  Matrix<Rational> values(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) values[static_cast<size_t>(i)].push_back(residue_integral(m.entry(i, j)));
  }
  return exact_determinant(values);
}

std::vector<SignedMatrix> reduce_equal_columns(const ClassMMatrix& m, int J, int J_prime) {
  m.validate();
  if (J == J_prime || J < 0 || J_prime < 0 || J >= m.size() || J_prime >= m.size()) {
    throw std::invalid_argument("reduce_equal_columns: need two distinct column indices");
  }
  const auto sj = static_cast<size_t>(J), sp = static_cast<size_t>(J_prime);
  const DegreeProfile profile = degree_profile(m);
  if (profile.column_degrees[sj] != profile.column_degrees[sp]) {
    throw std::invalid_argument("reduce_equal_columns: column degrees differ");
  }
  std::vector<SignedMatrix> out;
  long c = m.col_c[sj];
  int E = m.col_E[sj], G = m.col_G[sj];
  auto emit = [&](int sign, long lc, int lE, int lG) {
    SignedMatrix term{sign, m};
    term.matrix.col_c[sj] = lc;
    term.matrix.col_E[sj] = lE;
    term.matrix.col_G[sj] = lG;
    out.push_back(std::move(term));
  };
  const int target_E = m.col_E[sp], target_G = m.col_G[sp];
  while (E != target_E) {
    if (E > target_E) {
      // I(r,E,G) = I(r-1,E-1,G) + I(r-1,E,G)
      emit(1, c - 1, E, G);
      --c;
      --E;
    } else {
      // I(r,E,G) = I(r+1,E+1,G) - I(r,E+1,G)
      emit(-1, c, E + 1, G);
      ++c;
      ++E;
    }
  }
  while (G != target_G) {
    if (G > target_G) {
      // I(r,E,G) = I(r-1,E,G-1) - I(r-1,E,G)
      emit(-1, c - 1, E, G);
      --c;
      --G;
    } else {
      // I(r,E,G) = I(r+1,E,G+1) + I(r,E,G+1)
      emit(1, c, E, G + 1);
      ++c;
      ++G;
    }
  }
  if (c != m.col_c[sp]) throw std::logic_error("reduce_equal_columns: reduced column does not match");
  return out;
}

ClassMMatrix lemma1_matrix(int K) {
  require_positive_order(K, "lemma1_matrix");
  ClassMMatrix m;
  for (int i = 1; i <= 2 * K; ++i) {
    const bool top = i <= K;
    m.row_r.push_back(top ? i - 2 : i - K - 2);
    m.row_e.push_back(top ? K : 0);
    m.row_g.push_back(top ? 0 : K);
  }
  for (int j = 1; j <= 2 * K; ++j) {
    m.col_c.push_back(j);
    m.col_E.push_back(0);
    m.col_G.push_back(0);
  }
  return m;
}

ClassMMatrix lemma2_matrix(int K, Lemma2Variant variant) {
  ClassMMatrix m = lemma1_matrix(K);
  const size_t row = variant == Lemma2Variant::rowK ? static_cast<size_t>(K - 1) : static_cast<size_t>(2 * K - 1);
  m.row_r[row] += 1;
  return m;
}

ClassMMatrix differentiated_matrix(int K, Lemma2Variant variant, const std::vector<int>& m, const std::vector<int>& n) {
  ClassMMatrix out = lemma2_matrix(K, variant);
  if (m.size() != out.col_E.size() || n.size() != out.col_G.size()) {
    throw std::invalid_argument("differentiated_matrix: need 2K derivative counts");
  }
  out.col_E = m;
  out.col_G = n;
  out.validate();
  return out;
}

TruncatedSeries2 lemma1_determinant(int K, int cap) {
  if (cap < 2) throw std::invalid_argument("lemma1_determinant: cap must be at least 2");
  return class_m_determinant(lemma1_matrix(K), cap);
}

TruncatedSeries2 lemma2_determinant(int K, Lemma2Variant variant) {
  return class_m_determinant(lemma2_matrix(K, variant), 2 * K + 1);
}

Rational lemma2_leading_coefficient(int K, Lemma2Variant variant, int a, int b) {
  require_positive_order(K, "lemma2_leading_coefficient");
  if (a < 0 || b < 0 || a + b != 2 * K) throw std::invalid_argument("lemma2_leading_coefficient: need a + b = 2K");
  const Rational magnitude = Rational(binomial(2 * K - 2, K - 1)) * two_power(static_cast<long>(K - 1) * (K - 1)) *
                             inverse_factorial(a) * inverse_factorial(b);
  return variant == Lemma2Variant::rowK ? magnitude : -magnitude;
}

Matrix<Rational> binomial_matrix(int K) {
  require_positive_order(K, "binomial_matrix");
  Matrix<Rational> m;
  for (int half = 0; half < 2; ++half) {
    for (int i = 0; i < K; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < 2 * K; ++j) {
        const int sign = half == 0 ? 1 : parity_sign(i + j);
        row.push_back(Rational(binomial(j, i)) * sign);
      }
      m.push_back(std::move(row));
    }
  }
  return m;
}

Matrix<Rational> c_matrix(int K) {
  require_positive_order(K, "c_matrix");
  const int n = 2 * K;
  Matrix<Rational> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i <= j + 1) m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = inverse_factorial(j + 1 - i);
    }
  }
  return m;
}

Rational c_matrix_determinant(int K) { return exact_determinant(c_matrix(K)); }

std::vector<FinalIdentityRow> final_identity_table(int K) {
  require_positive_order(K, "final_identity_table");
  const int n = 2 * K;
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  const Integer total = factorial(static_cast<unsigned long>(n));
  std::vector<FinalIdentityRow> rows;
  do {
    bool legal = true;
    for (int j = 1; j <= n && legal; ++j) legal = sigma[static_cast<size_t>(j - 1)] <= j + 1;
    if (!legal) continue;
    FinalIdentityRow row;
    row.sigma = sigma;
    Integer denominator = 1;
    int inversions = 0;
    for (int j = 1; j <= n; ++j) {
      const int s = sigma[static_cast<size_t>(j - 1)];
      const int p = j + 1 - s;
      row.p.push_back(p);
      row.column_degrees.push_back(j - 1 - p);
      denominator *= factorial(static_cast<unsigned long>(p));
      for (int k = j + 1; k <= n; ++k) inversions += s > sigma[static_cast<size_t>(k - 1)];
    }
    row.sign = parity_sign(inversions);
    row.multiplicity = total / denominator;
    rows.push_back(std::move(row));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return rows;
}

double theorem2_value(int K, double a, double N) {
  require_positive_order(K, "theorem2_value");
  if (!(a > 0)) throw std::invalid_argument("theorem2_value: a must be positive");
  if (!(N > 0)) throw std::invalid_argument("theorem2_value: N must be positive");
  const double b = to_double(Rational(binomial(2 * K - 2, K - 1)));
  return b * std::pow(N, 2 * K) / std::pow(2 * a, 2 * K - 1);
}

}  // namespace moments
