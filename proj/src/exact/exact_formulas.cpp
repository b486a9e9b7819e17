#include "moments/exact_formulas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

#include "moments/series.hpp"

namespace moments {

namespace {

constexpr int kBernoulliTable = 240;

BigComplex widen(const BigComplex& x, unsigned bits) {
  BigComplex out(bits);
  out += x;
  return out;
}

BigComplex rounded(const BigComplex& x, unsigned bits) {
  BigComplex out(bits);
  mpfr_set(out.re.get(), x.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), x.im.get(), MPFR_RNDN);
  return out;
}

unsigned working_bits(const std::vector<BigComplex>& xs, unsigned floor_bits) {
  unsigned bits = floor_bits;
  for (const auto& x : xs) bits = std::max(bits, x.precision());
  return bits;
}

BigComplex one(unsigned bits) { return BigComplex(BigReal(1L, bits)); }

BigReal epsilon(unsigned bits) { return ldexp(BigReal(1L, bits), -static_cast<long>(bits)); }

bool near_zero_series(const BigComplex& x) { return abs(x).to_double() < 1e-3; }

double log10_ratio(const BigReal& num, const BigReal& den) {
  if (num.is_zero()) return -std::numeric_limits<double>::infinity();
  if (den.is_zero()) return std::numeric_limits<double>::infinity();
  const long shift = exponent2(num) - exponent2(den);
  const double mantissa = ldexp(num, -exponent2(num)).to_double() / ldexp(den, -exponent2(den)).to_double();
  return std::log10(mantissa) + static_cast<double>(shift) * std::log10(2.0);
}

double agreement_digits(const BigComplex& a, const BigComplex& b) {
  const BigReal diff = abs(a - b);
  const double cap = static_cast<double>(std::min(a.precision(), b.precision())) * std::log10(2.0);
  if (diff.is_zero()) return cap;
  return std::min(cap, -log10_ratio(diff, abs(b)));
}

}  // namespace

Rational bernoulli(int n) {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kBernoulliTable + 1);
    b[0] = 1;
    for (int m = 1; m <= kBernoulliTable; ++m) {
      Rational acc = 0;
      for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
      b[static_cast<size_t>(m)] = -acc / (m + 1);
    }
    return b;
  }();
  if (n < 0 || n > kBernoulliTable) throw std::out_of_range("bernoulli: index out of table range");
  return table[static_cast<size_t>(n)];
}

BigComplex z_eval(const BigComplex& x) {
  const unsigned bits = x.precision();
  if (x.is_zero()) throw PoleError("z: pole at 0");
  if (near_zero_series(x)) {
    // 1/x + 1/2 + sum_k B_{2k} x^{2k-1} / (2k)!
    const BigComplex inv = one(bits) / x;
    BigComplex acc = inv + BigComplex(BigReal(make_rational(1, 2), bits));
    const BigComplex x2 = x * x;
    BigComplex power = x;
    const BigReal tol = epsilon(bits) * abs(inv);
    for (int k = 1; 2 * k <= kBernoulliTable; ++k) {
      const Rational c = bernoulli(2 * k) / Rational(factorial(static_cast<unsigned long>(2 * k)));
      const BigComplex term = power * BigReal(c, bits);
      acc += term;
      if (abs(term) < tol) break;
      power *= x2;
    }
    return acc;
  }
  const BigComplex denom = -expm1(-x);
  if (abs(denom) < ldexp(BigReal(1L, bits), -static_cast<long>(bits) + 16)) throw PoleError("z: pole at 2 pi i k");
  return one(bits) / denom;
}

BigComplex z_prime(const BigComplex& x) {
  const unsigned bits = x.precision();
  if (x.is_zero()) throw PoleError("z': pole at 0");
  if (near_zero_series(x)) {
    // -1/x^2 + sum_k B_{2k} (2k-1) x^{2k-2} / (2k)!
    const BigComplex inv2 = one(bits) / (x * x);
    BigComplex acc = -inv2;
    const BigComplex x2 = x * x;
    BigComplex power = one(bits);
    const BigReal tol = epsilon(bits) * abs(inv2);
    for (int k = 1; 2 * k <= kBernoulliTable; ++k) {
      const Rational c = bernoulli(2 * k) * (2 * k - 1) / Rational(factorial(static_cast<unsigned long>(2 * k)));
      const BigComplex term = power * BigReal(c, bits);
      acc += term;
      if (abs(term) < tol) break;
      power *= x2;
    }
    return acc;
  }
  const BigComplex z = z_eval(x);
  return -(exp(-x) * z * z);
}

BigComplex z_log_derivative(const BigComplex& x) { return z_eval(-x); }

BigComplex z_log_derivative_prime(const BigComplex& x) { return -z_prime(-x); }

BigComplex permutation_moment(const std::vector<BigComplex>& alphas, long N) {
  if (alphas.empty() || alphas.size() % 2 != 0) throw std::invalid_argument("permutation_moment: need 2K shifts");
  if (alphas.size() > 24) throw std::invalid_argument("permutation_moment: too many shifts");
  const int two_k = static_cast<int>(alphas.size());
  const int K = two_k / 2;
  const unsigned bits = working_bits(alphas, kExactMinBits);
  std::vector<BigComplex> a;
  for (const auto& x : alphas) a.push_back(widen(x, bits));

  BigComplex half_total(bits);
  for (const auto& x : a) half_total += x;
  half_total = half_total * BigReal(make_rational(1, 2), bits);

  BigComplex total(bits);
  for (std::uint32_t mask = 0; mask < (1U << two_k); ++mask) {
    if (std::popcount(mask) != K) continue;
    BigComplex exponent = -half_total;
    for (int i = 0; i < two_k; ++i) {
      if (mask & (1U << i)) exponent += a[static_cast<size_t>(i)];
    }
    BigComplex term = exp(exponent * N);
    for (int i = 0; i < two_k; ++i) {
      if (!(mask & (1U << i))) continue;
      for (int j = 0; j < two_k; ++j) {
        if (mask & (1U << j)) continue;
        const BigComplex arg = a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)];
        if (arg.is_zero()) throw RemovableSingularity("permutation_moment: coincident shifts");
        term *= z_eval(arg);
      }
    }
    total += term;
  }
  return (N * K) % 2 == 0 ? total : -total;
}

BigComplex permutation_moment_limit(const std::vector<BigComplex>& alphas, long N) {
  if (alphas.empty() || alphas.size() % 2 != 0) throw std::invalid_argument("permutation_moment_limit: need 2K shifts");
  const unsigned bits = working_bits(alphas, 384);
  const int levels = 4;
  const double centre = (static_cast<double>(alphas.size()) - 1.0) / 2.0;
  std::vector<std::vector<BigComplex>> table(levels);
  BigReal h = ldexp(BigReal(1L, bits), -30);
  for (int m = 0; m < levels; ++m) {
    std::vector<BigComplex> shifted;
    for (size_t j = 0; j < alphas.size(); ++j) {
      shifted.push_back(widen(alphas[j], bits) + BigComplex(h * BigReal(static_cast<double>(j) - centre, bits), BigReal(bits)));
    }
    table[static_cast<size_t>(m)].push_back(permutation_moment(shifted, N));
    for (int k = 1; k <= m; ++k) {
      const long f = 1L << k;
      const auto& prev = table[static_cast<size_t>(m)];
      const auto& up = table[static_cast<size_t>(m - 1)];
      table[static_cast<size_t>(m)].push_back((prev[static_cast<size_t>(k - 1)] * f - up[static_cast<size_t>(k - 1)]) *
                                              BigReal(make_rational(1, f - 1), bits));
    }
    h = ldexp(h, -1);
  }
  return table.back().back();
}

Rational k1_mixed_moment_exact(long N, int M) {
  if (N < 1) throw std::invalid_argument("k1_mixed_moment_exact: N must be positive");
  if (M != 0 && M != 1) throw std::invalid_argument("k1_mixed_moment_exact: M must be 0 or 1");
  // G(d) = sinh((N+1) d/2) / sinh(d/2); the moment is G(0) for M = 1 and G''(0) for M = 0
  const int order = 4;
  auto sinh_over_d = [order](const Rational& c) {
    TruncatedSeries1 s(order);
    for (int k = 0; 2 * k <= order; ++k) {
      s[2 * k] = power(c, 2 * k + 1) / Rational(factorial(static_cast<unsigned long>(2 * k + 1)));
    }
    return s;
  };
  const TruncatedSeries1 g = sinh_over_d(make_rational(N + 1, 2)) * series_inverse(sinh_over_d(make_rational(1, 2)));
  return M == 1 ? g[0] : g[2] * 2;
}

JStarTerms j_star_terms(const ShiftSets& sets, long N) {
  std::vector<BigComplex> all = sets.A;
  all.insert(all.end(), sets.B.begin(), sets.B.end());
  const unsigned bits = working_bits(all, kExactMinBits);
  for (const auto& x : all) {
    if (x.re.sign() <= 0) throw std::invalid_argument("j_star: shifts need positive real part");
  }
  if (sets.A.size() > 12 || sets.B.size() > 12) throw std::invalid_argument("j_star: sets too large");
  std::vector<BigComplex> A, B;
  for (const auto& x : sets.A) A.push_back(widen(x, bits));
  for (const auto& x : sets.B) B.push_back(widen(x, bits));
  auto require_distinct = [](const std::vector<BigComplex>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      for (size_t j = i + 1; j < v.size(); ++j) {
        if ((v[i] - v[j]).is_zero()) throw RemovableSingularity("j_star: repeated shift; use j_star_coincident");
      }
    }
  };
  require_distinct(A);
  require_distinct(B);

  JStarTerms out{BigComplex(bits), BigReal(bits)};
  const size_t na = A.size(), nb = B.size();
  for (std::uint32_t ms = 0; ms < (1U << na); ++ms) {
    for (std::uint32_t mt = 0; mt < (1U << nb); ++mt) {
      if (std::popcount(ms) != std::popcount(mt)) continue;
      std::vector<BigComplex> S, T, restA, restB;
      for (size_t i = 0; i < na; ++i) ((ms >> i) & 1U ? S : restA).push_back(A[i]);
      for (size_t j = 0; j < nb; ++j) ((mt >> j) & 1U ? T : restB).push_back(B[j]);

      BigComplex shift_sum(bits);
      for (const auto& s : S) shift_sum += s;
      for (const auto& t : T) shift_sum += t;
      BigComplex prefactor = exp(-(shift_sum * N));
      for (const auto& s : S) {
        for (const auto& t : T) prefactor *= z_eval(s + t) * z_eval(-(s + t));
      }
      auto dagger = [&prefactor](const std::vector<BigComplex>& U) {
        for (size_t i = 0; i < U.size(); ++i) {
          for (size_t j = 0; j < U.size(); ++j) {
            if (i != j) prefactor /= z_eval(U[i] - U[j]);
          }
        }
      };
      dagger(S);
      dagger(T);

      std::vector<BigComplex> h_alpha, h_beta;
      for (const auto& a : restA) {
        BigComplex h(bits);
        for (const auto& s : S) h += z_log_derivative(a - s);
        for (const auto& t : T) h -= z_log_derivative(a + t);
        h_alpha.push_back(std::move(h));
      }
      for (const auto& b : restB) {
        BigComplex h(bits);
        for (const auto& t : T) h += z_log_derivative(b - t);
        for (const auto& s : S) h -= z_log_derivative(b + s);
        h_beta.push_back(std::move(h));
      }
      std::vector<std::vector<BigComplex>> pair(restA.size());
      for (size_t i = 0; i < restA.size(); ++i) {
        for (const auto& b : restB) pair[i].push_back(z_log_derivative_prime(restA[i] + b));
      }

      // Partial matchings of restA with restB; unmatched elements are singletons.
      std::vector<bool> used(restB.size(), false);
      std::function<void(size_t, BigComplex)> walk = [&](size_t i, BigComplex acc) {
        if (i == restA.size()) {
          for (size_t j = 0; j < restB.size(); ++j) {
            if (!used[j]) acc *= h_beta[j];
          }
          const BigReal size = abs(acc);
          if (size > out.max_term) out.max_term = size;
          out.value += acc;
          return;
        }
        walk(i + 1, acc * h_alpha[i]);
        for (size_t j = 0; j < restB.size(); ++j) {
          if (used[j]) continue;
          used[j] = true;
          walk(i + 1, acc * pair[i][j]);
          used[j] = false;
        }
      };
      walk(0, prefactor);
    }
  }
  return out;
}

BigComplex j_star(const ShiftSets& sets, long N) { return j_star_terms(sets, N).value; }

CoincidentReport j_star_coincident_report(int K, const BigComplex& alpha, long N, unsigned bits) {
  if (K < 1 || K > 3) throw std::invalid_argument("j_star_coincident: K must be 1, 2 or 3");
  if (alpha.re.sign() <= 0) throw std::invalid_argument("j_star_coincident: alpha needs positive real part");
  if (N < 1) throw std::invalid_argument("j_star_coincident: N must be positive");
  bits = std::max(bits, alpha.precision());
  const unsigned check_bits = bits + 128;

  // Perturbations are centred, (j - (K+1)/2) delta, so J is even in delta.
  const double scale = std::min(abs(alpha).to_double(), 1.0 / static_cast<double>(N));
  const int levels = 3;
  BigReal delta = BigReal(1e-4, check_bits) * BigReal(scale, check_bits);

  CoincidentReport report{BigComplex(bits)};
  report.cancellation_digits = std::numeric_limits<double>::infinity();
  std::vector<std::vector<BigComplex>> table(levels);
  for (int m = 0; m < levels; ++m) {
    auto sets_at = [&](unsigned precision) {
      ShiftSets sets;
      for (int j = 1; j <= K; ++j) {
        const BigReal offset = delta * BigReal(static_cast<double>(j) - (K + 1) / 2.0, check_bits);
        sets.A.push_back(rounded(widen(alpha, check_bits) + BigComplex(offset, BigReal(check_bits)), precision));
      }
      sets.B = sets.A;
      return sets;
    };
    const JStarTerms work = j_star_terms(sets_at(bits), N);
    const JStarTerms check = j_star_terms(sets_at(check_bits), N);
    report.cancellation_digits = std::min(report.cancellation_digits, agreement_digits(work.value, check.value));
    report.digits_lost = std::max(report.digits_lost, log10_ratio(work.max_term, abs(work.value)));

    table[static_cast<size_t>(m)].push_back(work.value);
    for (int k = 1; k <= m; ++k) {
      const long f = 1L << (2 * k);
      const auto& prev = table[static_cast<size_t>(m)];
      const auto& up = table[static_cast<size_t>(m - 1)];
      table[static_cast<size_t>(m)].push_back((prev[static_cast<size_t>(k - 1)] * f - up[static_cast<size_t>(k - 1)]) *
                                              BigReal(make_rational(1, f - 1), bits));
    }
    delta = ldexp(delta, -1);
  }
  if (report.cancellation_digits < 30) {
    throw std::runtime_error("j_star_coincident: divergent terms did not cancel to 30 digits");
  }
  report.value = table.back().back();
  report.extrapolation_change =
      std::pow(10.0, -agreement_digits(table.back().front(), report.value));
  return report;
}

BigComplex j_star_coincident(int K, const BigComplex& alpha, long N, unsigned bits) {
  return j_star_coincident_report(K, alpha, N, bits).value;
}

BigComplex section6_closed(int K, const BigComplex& alpha, long N) {
  if (K != 1 && K != 2) throw std::invalid_argument("section6_closed: K must be 1 or 2");
  if (alpha.is_zero()) throw PoleError("section6_closed: pole at alpha = 0");
  const unsigned bits = std::max(kExactMinBits, alpha.precision());
  const BigComplex a = widen(alpha, bits);
  const BigComplex two_a = a * 2L;
  if (K == 1) {
    return z_log_derivative_prime(two_a) + exp(-(two_a * N)) * z_eval(two_a) * z_eval(-two_a);
  }
  // [2 e^{4a} (1 - e^{-2Na}) - N^2 e^{(2-2N)a} (e^{2a} - 1)^2] / (e^{2a} - 1)^4
  const BigComplex em = expm1(two_a);
  const BigComplex em2 = em * em;
  const BigComplex n2(BigReal(N, bits) * BigReal(N, bits));
  const BigComplex numerator =
      exp(a * 4L) * (-expm1(-(two_a * N))) * 2L - n2 * exp(two_a - two_a * N) * em2;
  return numerator / (em2 * em2);
}

}  // namespace moments
