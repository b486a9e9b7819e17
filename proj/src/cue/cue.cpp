#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "moments/cue.hpp"

namespace moments {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0;
  return r;
}

std::complex<double> unit(double theta) { return {std::cos(theta), -std::sin(theta)}; }  // e^{-i theta}

BigComplex big_unit(double theta, unsigned bits) { return conj(unit_phasor(theta, bits)); }

double pole_scale(std::complex<double> s) { return 1e-12 * std::max(1.0, std::abs(s)); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer applied to a counter keyed by the master seed
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EigenAngles sample_eigenangles(int n, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("sample_eigenangles: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));

  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = {re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double m = std::abs(d);
    if (m > 0) q.col(j) *= d / m;
  }

  std::vector<std::complex<double>> w(static_cast<size_t>(n));
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, q.data(), n, w.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("sample_eigenangles: eigensolver failed");

  EigenAngles out;
  out.angles.reserve(static_cast<size_t>(n));
  for (const auto& ev : w) out.angles.push_back(reduce_angle(std::arg(ev)));
  return out;
}

std::complex<double> lambda_at(const EigenAngles& spectrum, std::complex<double> s) {
  std::complex<double> acc = 1.0;
  for (double theta : spectrum.angles) acc *= 1.0 - s * unit(theta);
  return acc;
}

BigComplex lambda_at(const EigenAngles& spectrum, const BigComplex& s) {
  const unsigned bits = s.precision();
  BigComplex acc(BigReal(1L, bits));
  for (double theta : spectrum.angles) acc *= 1L - s * big_unit(theta, bits);
  return acc;
}

std::complex<double> lambda_log_derivative(const EigenAngles& spectrum, std::complex<double> s) {
  std::complex<double> acc = 0.0;
  for (double theta : spectrum.angles) {
    const std::complex<double> e = unit(theta);
    const std::complex<double> factor = 1.0 - s * e;
    if (std::abs(factor) < pole_scale(s)) throw PoleError("lambda_log_derivative: s is an eigenvalue");
    acc -= e / factor;
  }
  return acc;
}

BigComplex lambda_log_derivative(const EigenAngles& spectrum, const BigComplex& s) {
  const unsigned bits = s.precision();
  BigComplex acc(bits);
  for (double theta : spectrum.angles) {
    const BigComplex e = big_unit(theta, bits);
    const BigComplex factor = 1L - s * e;
    if (abs(factor).to_double() < pole_scale(s.to_complex())) {
      throw PoleError("lambda_log_derivative: s is an eigenvalue");
    }
    acc -= e / factor;
  }
  return acc;
}

ZValues z_and_zprime(const EigenAngles& spectrum) {
  const double n = static_cast<double>(spectrum.n());
  double theta_sum = 0;
  for (double theta : spectrum.angles) theta_sum += theta;
  const double phase = std::fmod(-std::numbers::pi * n / 2.0 + theta_sum / 2.0, kTwoPi);
  const std::complex<double> prefactor = std::polar(1.0, phase);

  // 1 - e^{-i theta} = 2 sin(theta/2) e^{i (pi - theta)/2}
  std::vector<std::complex<double>> factors;
  factors.reserve(spectrum.n());
  for (double theta : spectrum.angles) {
    factors.push_back(std::polar(2.0 * std::sin(theta / 2.0), (std::numbers::pi - theta) / 2.0));
  }
  // Lambda'(1) = sum_j -e_j prod_{k != j} (1 - e_k), without dividing by Lambda(1)
  std::vector<std::complex<double>> prefix(factors.size() + 1, 1.0);
  for (size_t j = 0; j < factors.size(); ++j) prefix[j + 1] = prefix[j] * factors[j];
  std::complex<double> suffix = 1.0;
  std::complex<double> lambda_prime = 0.0;
  for (size_t j = factors.size(); j-- > 0;) {
    lambda_prime -= unit(spectrum.angles[j]) * prefix[j] * suffix;
    suffix *= factors[j];
  }
  const std::complex<double> lambda = prefix.back();

  const std::complex<double> z = prefactor * lambda;
  if (std::abs(z.imag()) > 1e-9 * std::abs(z) + 1e-300) {
    throw std::logic_error("z_and_zprime: Z(1) is not real");
  }
  return {z.real(), prefactor * (lambda_prime - (n / 2.0) * lambda)};
}

MomentSpec MomentSpec::abs_lambda_power(double p) {
  MomentSpec s;
  s.kind = MomentKind::abs_lambda_power;
  s.power = p;
  return s;
}

MomentSpec MomentSpec::mixed_z(int K, int M) {
  MomentSpec s;
  s.kind = MomentKind::mixed_z;
  s.K = K;
  s.M = M;
  s.validate();
  return s;
}

MomentSpec MomentSpec::logderiv(int K, double a) {
  MomentSpec s;
  s.kind = MomentKind::logderiv;
  s.K = K;
  s.a = a;
  s.validate();
  return s;
}

void MomentSpec::validate() const {
  switch (kind) {
    case MomentKind::abs_lambda_power:
      if (!std::isfinite(power)) throw std::invalid_argument("MomentSpec: power must be finite");
      break;
    case MomentKind::mixed_z:
      if (K < 0 || M < 0 || M > K) throw std::invalid_argument("MomentSpec: need 0 <= M <= K");
      break;
    case MomentKind::logderiv:
      if (K < 1) throw std::invalid_argument("MomentSpec: need K >= 1");
      if (!(a > 0)) throw std::invalid_argument("MomentSpec: need a > 0");
      break;
  }
}

double observable(const MomentSpec& spec, const EigenAngles& spectrum) {
  switch (spec.kind) {
    case MomentKind::abs_lambda_power: {
      if (spec.power == 0) return 1.0;
      return std::pow(std::abs(lambda_at(spectrum, 1.0)), spec.power);
    }
    case MomentKind::mixed_z: {
      const ZValues zv = z_and_zprime(spectrum);
      const int dp = 2 * spec.K - 2 * spec.M;
      const int zp = 2 * spec.M;
      if (spec.K >= 2) {
        const unsigned bits = 128;
        const BigReal value = pow(BigReal(std::abs(zv.zprime), bits), dp) * pow(BigReal(std::abs(zv.z), bits), zp);
        return value.to_double();
      }
      return std::pow(std::abs(zv.zprime), dp) * std::pow(std::abs(zv.z), zp);
    }
    case MomentKind::logderiv: {
      const double s = std::exp(-spec.a / static_cast<double>(spectrum.n()));
      const double m = std::abs(lambda_log_derivative(spectrum, s));
      return std::pow(m, 2 * spec.K);
    }
  }
  return 0.0;
}

double pairwise_sum(const double* values, std::size_t count) {
  if (count <= 8) {
    double acc = 0;
    for (std::size_t i = 0; i < count; ++i) acc += values[i];
    return acc;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

MomentEstimate estimate_moment(const MomentSpec& spec, int n, std::size_t samples, std::uint64_t seed,
                               unsigned workers) {
  spec.validate();
  if (samples < 2) throw std::invalid_argument("estimate_moment: need at least 2 samples");
  if (n <= 0) throw std::invalid_argument("estimate_moment: n must be positive");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples));

  std::vector<double> values(samples);
  std::vector<std::uint32_t> retries(samples, 0);
  auto run = [&](unsigned worker) {
    for (std::size_t i = worker; i < samples; i += workers) {
      std::uint64_t sample_seed = derive_seed(seed, i);
      for (;;) {
        try {
          values[i] = observable(spec, sample_eigenangles(n, sample_seed));
          break;
        } catch (const PoleError&) {
          ++retries[i];
          sample_seed = derive_seed(sample_seed, retries[i]);
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  MomentEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = pairwise_sum(values.data(), samples) / static_cast<double>(samples);
  std::vector<double> sq(samples);
  for (std::size_t i = 0; i < samples; ++i) sq[i] = (values[i] - est.mean) * (values[i] - est.mean);
  const double variance = pairwise_sum(sq.data(), samples) / static_cast<double>(samples - 1);
  est.std_error = std::sqrt(variance / static_cast<double>(samples));
  for (auto r : retries) est.pole_retries += r;
  return est;
}

}  // namespace moments
