#include "moments/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "moments/big_real.hpp"
#include "moments/determinant.hpp"

namespace moments {

namespace {

std::string index_name(const MultiIndex& n) {
  return "(" + std::to_string(n.n1) + ", " + std::to_string(n.n2) + ")";
}

void require_weight(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("weight index must be 1 or 2");
}

void require_index(const MultiIndex& n) {
  if (n.n1 < 0 || n.n2 < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
}

cplx determinant(const Matrix<cplx>& m) {
  if (m.empty()) return 1.0;
  Matrix<BigComplex> wide(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (const cplx& x : m[i]) wide[i].emplace_back(x, kHankelBits);
  }
  return complex_determinant(std::move(wide)).to_complex();
}

// moment rows for n with `columns` columns: mu^(1)_{i+l}, then mu^(2)_{i+l}
Matrix<cplx> moment_rows(const MultiIndex& n, int columns, const WeightParams& p) {
  const int needed = std::max(n.n1, n.n2) - 1 + columns;
  const auto mu = weight_moments(std::max(needed, 0), p);
  Matrix<cplx> rows;
  for (int j = 0; j < 2; ++j) {
    const int count = j == 0 ? n.n1 : n.n2;
    for (int i = 0; i < count; ++i) {
      std::vector<cplx> row;
      for (int l = 0; l < columns; ++l) row.push_back(mu[static_cast<size_t>(j)][static_cast<size_t>(i + l)]);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

cplx checked_delta(const MultiIndex& n, const WeightParams& p) {
  const cplx d = hankel_delta(n, p);
  if (std::abs(d) < kDegenerateDelta) {
    throw DegenerateDeterminant("Delta" + index_name(n) + " vanishes at these parameters");
  }
  return d;
}

// (1/2 pi i) \oint u^power P(u) w^(j)(u) du
cplx weighted_polynomial_integral(int j, int power, const std::vector<cplx>& poly, const WeightParams& p) {
  return circle_integral([&](cplx u) { return std::pow(u, power) * evaluate_polynomial(poly, u) * weight(j, u, p); });
}

}  // namespace

void WeightParams::validate() const {
  if (K < 1) throw std::invalid_argument("WeightParams: K must be positive");
  if (!std::isfinite(a) || !std::isfinite(t1) || !std::isfinite(t2)) {
    throw std::invalid_argument("WeightParams: parameters must be finite");
  }
}

std::vector<cplx> circle_integrals(const std::function<void(cplx u, std::vector<cplx>& out)>& f, int count) {
  const double radius = 2.0;
  std::vector<cplx> sum(static_cast<size_t>(count)), values(static_cast<size_t>(count));
  std::vector<double> magnitude(static_cast<size_t>(count));
  std::vector<cplx> previous;
  auto accumulate = [&](int nodes, int start, int step) {
    for (int k = start; k < nodes; k += step) {
      const cplx u = std::polar(radius, 2.0 * std::numbers::pi * k / nodes);
      f(u, values);
      for (size_t c = 0; c < values.size(); ++c) {
        const cplx term = values[c] * u;
        sum[c] += term;
        magnitude[c] += std::abs(term);
      }
    }
  };
  int nodes = kQuadratureStartNodes;
  accumulate(nodes, 0, 1);
  while (true) {
    std::vector<cplx> current(sum.size());
    for (size_t c = 0; c < sum.size(); ++c) current[c] = sum[c] / static_cast<double>(nodes);
    if (!previous.empty()) {
      bool settled = true;
      for (size_t c = 0; c < sum.size() && settled; ++c) {
        const double scale = std::max(std::abs(current[c]), magnitude[c] / nodes);
        settled = std::abs(current[c] - previous[c]) <= kQuadratureTolerance * scale;
      }
      if (settled) return current;
    }
    if (nodes >= kQuadratureMaxNodes) {
      throw ConvergenceError("circle quadrature did not converge with " + std::to_string(nodes) +
                             " nodes; parameters out of range");
    }
    previous = std::move(current);
    nodes *= 2;
    accumulate(nodes, 1, 2);
  }
}

cplx circle_integral(const std::function<cplx(cplx)>& f) {
  return circle_integrals([&](cplx u, std::vector<cplx>& out) { out[0] = f(u); }, 1)[0];
}

cplx weight(int j, cplx u, const WeightParams& p) {
  require_weight(j);
  const double sign = j == 1 ? 1.0 : -1.0;
  const cplx exponent = sign * p.a * u / 2.0 + p.t1 / (u - 1.0) + p.t2 / (u + 1.0);
  return std::exp(exponent) / std::pow(u - sign, p.K);
}

std::array<std::vector<cplx>, 2> weight_moments(int max_l, const WeightParams& p) {
  p.validate();
  if (max_l < 0) throw std::invalid_argument("weight_moments: max_l must be nonnegative");
  const int per = max_l + 1;
  const std::vector<cplx> flat = circle_integrals(
      [&](cplx u, std::vector<cplx>& out) {
        const cplx w1 = weight(1, u, p), w2 = weight(2, u, p);
        cplx power = 1.0;
        for (int l = 0; l < per; ++l) {
          out[static_cast<size_t>(l)] = power * w1;
          out[static_cast<size_t>(per + l)] = power * w2;
          power *= u;
        }
      },
      2 * per);
  std::array<std::vector<cplx>, 2> out;
  out[0].assign(flat.begin(), flat.begin() + per);
  out[1].assign(flat.begin() + per, flat.end());
  return out;
}

cplx weight_moment(int j, int l, const WeightParams& p) {
  require_weight(j);
  if (l < 0) throw std::invalid_argument("weight_moment: l must be nonnegative");
  p.validate();
  return circle_integral([&](cplx u) { return std::pow(u, l) * weight(j, u, p); });
}

Matrix<cplx> moment_matrix(const MultiIndex& n, const WeightParams& p) {
  require_index(n);
  return moment_rows(n, n.size(), p);
}

cplx hankel_delta(const MultiIndex& n, const WeightParams& p) {
  require_index(n);
  p.validate();
  if (n.size() == 0) return 1.0;
  return determinant(moment_matrix(n, p));
}

std::vector<int> block_hankel_permutation(int K) {
  if (K < 1) throw std::invalid_argument("block_hankel_permutation: K must be positive");
  std::vector<int> perm(static_cast<size_t>(2 * K));
  for (int half = 0; half < 2; ++half) {
    for (int j = 0; j < K; ++j) perm[static_cast<size_t>(half * K + j)] = 2 * j + half;
  }
  return perm;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    size_t length = 0;
    for (size_t k = start; !seen[k]; k = static_cast<size_t>(perm[k])) {
      seen[k] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

Matrix<cplx> block_hankel_matrix(const WeightParams& p) {
  const int K = p.K;
  const Matrix<cplx> delta = moment_matrix({K, K}, p);
  const std::vector<int> perm = block_hankel_permutation(K);
  Matrix<cplx> out(delta.size(), std::vector<cplx>(delta.size()));
  for (size_t i = 0; i < delta.size(); ++i) {
    for (size_t c = 0; c < delta.size(); ++c) {
      out[static_cast<size_t>(perm[i])][static_cast<size_t>(perm[c])] = delta[i][c];
    }
  }
  return out;
}

std::vector<cplx> mop_coefficients(const MultiIndex& n, const WeightParams& p) {
  require_index(n);
  p.validate();
  const int size = n.size();
  if (size == 0) return {1.0};
  const cplx delta = checked_delta(n, p);
  const Matrix<cplx> rows = moment_rows(n, size + 1, p);
  std::vector<cplx> coefficients;
  for (int k = 0; k <= size; ++k) {
    Matrix<cplx> minor;
    for (const auto& row : rows) {
      std::vector<cplx> r;
      for (int c = 0; c <= size; ++c) {
        if (c != k) r.push_back(row[static_cast<size_t>(c)]);
      }
      minor.push_back(std::move(r));
    }
    const double sign = (size + k) % 2 == 0 ? 1.0 : -1.0;
    coefficients.push_back(sign * determinant(minor) / delta);
  }
  return coefficients;
}

cplx evaluate_polynomial(const std::vector<cplx>& coefficients, cplx u) {
  cplx acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double mop_orthogonality_residual(const MultiIndex& n, const WeightParams& p) {
  const std::vector<cplx> poly = mop_coefficients(n, p);
  double worst = 0;
  for (int j = 1; j <= 2; ++j) {
    const int count = j == 1 ? n.n1 : n.n2;
    for (int l = 0; l < count; ++l) worst = std::max(worst, std::abs(weighted_polynomial_integral(j, l, poly, p)));
  }
  return worst;
}

GammaEntries gamma_entries(const MultiIndex& n, const WeightParams& p) {
  GammaEntries g;
  const std::vector<cplx> poly = mop_coefficients(n, p);
  g.g12 = -weighted_polynomial_integral(1, n.n1, poly, p);
  g.g13 = -weighted_polynomial_integral(2, n.n2, poly, p);
  if (n.n1 > 0) {
    const std::vector<cplx> lower = mop_coefficients({n.n1 - 1, n.n2}, p);
    g.b1 = -1.0 / weighted_polynomial_integral(1, n.n1 - 1, lower, p);
  }
  if (n.n2 > 0) {
    const std::vector<cplx> lower = mop_coefficients({n.n1, n.n2 - 1}, p);
    g.b2 = -1.0 / weighted_polynomial_integral(2, n.n2 - 1, lower, p);
  }
  return g;
}

double gamma_recurrence_residual(const MultiIndex& n, const WeightParams& p) {
  require_index(n);
  const cplx delta = checked_delta(n, p);
  const cplx lower1 = n.n1 > 0 ? checked_delta({n.n1 - 1, n.n2}, p) : cplx(0.0);
  const cplx lower2 = n.n2 > 0 ? checked_delta({n.n1, n.n2 - 1}, p) : cplx(0.0);
  const GammaEntries g = gamma_entries(n, p);
  const double parity = n.n2 % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n2+1}
  auto deviation = [](cplx got, cplx expected) { return std::abs(got - expected) / std::max(1.0, std::abs(expected)); };
  double worst = deviation(g.g12, parity * hankel_delta({n.n1 + 1, n.n2}, p) / delta);
  worst = std::max(worst, deviation(g.g13, -hankel_delta({n.n1, n.n2 + 1}, p) / delta));
  if (n.n1 > 0) worst = std::max(worst, deviation(g.b1, parity * lower1 / delta));
  if (n.n2 > 0) worst = std::max(worst, deviation(g.b2, -lower2 / delta));
  return worst;
}

cplx product_formula_delta(const WeightParams& p) {
  p.validate();
  cplx product = 1.0;
  for (int j = 1; j <= p.K; ++j) {
    const GammaEntries g = gamma_entries({j - 1, j}, p);
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    product *= sign * g.g12 / g.b2;
  }
  return product;
}

cplx product_formula_delta_limit(const WeightParams& p, double h) {
  if (!(h > 0)) throw std::invalid_argument("product_formula_delta_limit: h must be positive");
  // symmetric means in a are even in h; three Richardson levels in h^2
  auto symmetric = [&](double step) {
    WeightParams lo = p, hi = p;
    lo.a -= step;
    hi.a += step;
    return 0.5 * (product_formula_delta(lo) + product_formula_delta(hi));
  };
  std::array<cplx, 3> level{symmetric(h), symmetric(h / 2), symmetric(h / 4)};
  for (int round = 1; round < 3; ++round) {
    const double factor = std::pow(4.0, round);
    for (int k = 0; k + round < 3; ++k) level[k] = (factor * level[k + 1] - level[k]) / (factor - 1.0);
  }
  return level[0];
}

cplx cauchy_transform(int j, cplx u, const WeightParams& p) {
  require_weight(j);
  p.validate();
  if (std::abs(std::abs(u) - 2.0) < 1e-12) throw std::invalid_argument("cauchy_transform: u lies on the contour");
  return circle_integral([&](cplx v) { return weight(j, v, p) / (v - u); });
}

std::array<double, 2> plemelj_jump_residuals(const WeightParams& p, double phase, double delta) {
  if (!(delta > 0 && delta < 0.5)) throw std::invalid_argument("plemelj_jump_residual: delta must lie in (0, 0.5)");
  const cplx direction = std::polar(1.0, phase);
  const cplx inside = (2.0 - delta) * direction, outside = (2.0 + delta) * direction, on = 2.0 * direction;
  std::array<double, 2> out{};
  for (int j = 1; j <= 2; ++j) {
    const cplx jump = cauchy_transform(j, inside, p) - cauchy_transform(j, outside, p);
    out[static_cast<size_t>(j - 1)] = std::abs(jump - weight(j, on, p));
  }
  return out;
}

double plemelj_jump_residual(const WeightParams& p, double phase, double delta) {
  const auto r = plemelj_jump_residuals(p, phase, delta);
  return std::max(r[0], r[1]);
}

double tau_zero(const WeightParams& p) {
  p.validate();
  return std::exp(-p.K * p.a + p.K * (p.t2 - p.t1) / 6.0 - p.t1 * p.t2 / 6.0);
}

cplx tau_kk_from_delta(const WeightParams& p) {
  const cplx delta = hankel_delta({p.K, p.K}, p);
  const double scale = std::pow(-2.0, p.K * p.K) * std::exp(p.K * p.a - p.K * (p.t2 - p.t1) / 6.0 + p.t1 * p.t2 / 6.0);
  return delta / scale;
}

TauOriginReport tau_relations_at_origin(int K) {
  if (K < 1 || K > 3) throw std::invalid_argument("tau_relations_at_origin: K must be 1, 2 or 3");
  const WeightParams origin{0, 0, 0, K};
  TauOriginReport r;
  r.tau_zero_residual = std::abs(tau_zero(origin) - 1.0);
  const cplx delta = hankel_delta({K, K}, origin);
  r.delta_residual = std::abs(delta / std::pow(-2.0, K * K) - 1.0);
  r.tau_kk = tau_kk_from_delta(origin);
  return r;
}

}  // namespace moments
