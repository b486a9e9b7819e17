#include "moments/determinant.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace moments {

namespace {

template <class T>
void require_square(const Matrix<T>& m, const char* who) {
  if (m.empty() || !is_square(m)) throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

// D(r, S) = sum_{c in S} (-1)^{#(S below c)} a[r][c] D(r+1, S \ c), computed
// bottom-up so that every minor on the trailing rows is evaluated once.
template <class Series, class MakeZero, class MakeOne>
Series minor_expansion(const Matrix<Series>& a, MakeZero zero, MakeOne one) {
  const int n = static_cast<int>(a.size());
  if (n > 20) throw std::invalid_argument("series_determinant: matrix too large for minor expansion");
  const std::uint32_t full = (1U << n) - 1U;
  std::vector<std::optional<Series>> minors(static_cast<size_t>(full) + 1);
  minors[0] = one();
  for (int size = 1; size <= n; ++size) {
    const int row = n - size;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) != size) continue;
      Series acc = zero();
      int below = 0;
      for (int c = 0; c < n; ++c) {
        if (!(mask & (1U << c))) continue;
        const Series& entry = a[static_cast<size_t>(row)][static_cast<size_t>(c)];
        const Series& rest = *minors[mask & ~(1U << c)];
        Series term = entry * rest;
        if (below % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
        ++below;
      }
      minors[mask] = std::move(acc);
    }
    // Minors of the previous size are no longer needed.
    if (size >= 2) {
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) == size - 1) minors[mask].reset();
      }
    }
  }
  return *minors[full];
}

}  // namespace

Rational exact_determinant(const Matrix<Rational>& matrix) {
  require_square(matrix, "exact_determinant");
  const size_t n = matrix.size();

  Matrix<Integer> m(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (const auto& q : matrix[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (size_t j = 0; j < n; ++j) m[i][j] = matrix[i][j].get_num() * (lcm / matrix[i][j].get_den());
    scale *= lcm;
  }

  int sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational det(m[n - 1][n - 1] * sign);
  det /= scale;
  return det;
}

TruncatedSeries2 series_determinant(const Matrix<TruncatedSeries2>& matrix) {
  require_square(matrix, "series_determinant");
  const int cap = matrix[0][0].cap();
  for (const auto& row : matrix) {
    for (const auto& entry : row) {
      if (entry.cap() != cap) throw std::invalid_argument("series_determinant: mismatched caps");
    }
  }
  return minor_expansion(
      matrix, [cap] { return TruncatedSeries2(cap); }, [cap] { return TruncatedSeries2::constant(1, cap); });
}

TruncatedSeries1 series_determinant(const Matrix<TruncatedSeries1>& matrix) {
  require_square(matrix, "series_determinant");
  const int order = matrix[0][0].order();
  for (const auto& row : matrix) {
    for (const auto& entry : row) {
      if (entry.order() != order) throw std::invalid_argument("series_determinant: mismatched orders");
    }
  }
  return minor_expansion(
      matrix, [order] { return TruncatedSeries1(order); },
      [order] { return TruncatedSeries1::constant(1, order); });
}

BigComplex complex_determinant(Matrix<BigComplex> m) {
  require_square(m, "complex_determinant");
  const size_t n = m.size();
  BigComplex det(BigReal(1L, m[0][0].precision()));
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    BigReal best = norm(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      BigReal candidate = norm(m[i][k]);
      if (candidate > best) {
        best = std::move(candidate);
        pivot = i;
      }
    }
    if (best.is_zero()) return BigComplex(m[0][0].precision());
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      const BigComplex factor = m[i][k] / m[k][k];
      for (size_t j = k + 1; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

}  // namespace moments
