#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "moments/cue.hpp"

using namespace moments;

namespace {

struct Running {
  double sum = 0, sum_sq = 0;
  int count = 0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return sum / count; }
  double std_error() const {
    const double var = (sum_sq - sum * sum / count) / (count - 1);
    return std::sqrt(var / count);
  }
};

EigenAngles random_angles(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  EigenAngles e;
  for (int i = 0; i < n; ++i) e.angles.push_back(u(rng));
  return e;
}

}  // namespace

TEST_CASE("sampling is deterministic and well formed") {
  const auto a = sample_eigenangles(5, 42);
  const auto b = sample_eigenangles(5, 42);
  CHECK(a.angles == b.angles);
  CHECK(a.n() == 5);
  for (double t : a.angles) {
    CHECK(t >= 0.0);
    CHECK(t < 2.0 * std::numbers::pi);
  }
  CHECK(sample_eigenangles(5, 43).angles != a.angles);
  CHECK_THROWS(sample_eigenangles(0, 1));
}

TEST_CASE("derived seeds differ per index and per master") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("n = 1 phases are uniform") {
  Running re, im;
  for (std::uint64_t s = 0; s < 100000; ++s) {
    const double t = sample_eigenangles(1, derive_seed(99, s)).angles[0];
    re.add(std::cos(t));
    im.add(std::sin(t));
  }
  CHECK(std::abs(re.mean()) < 3 * re.std_error());
  CHECK(std::abs(im.mean()) < 3 * im.std_error());
}

TEST_CASE("trace moments match the CUE values") {
  for (int n : {2, 20}) {
    Running re, im, sq;
    const int samples = n == 2 ? 40000 : 20000;
    for (int s = 0; s < samples; ++s) {
      const auto e = sample_eigenangles(n, derive_seed(5, static_cast<std::uint64_t>(s)));
      std::complex<double> tr = 0;
      for (double t : e.angles) tr += std::polar(1.0, t);
      re.add(tr.real());
      im.add(tr.imag());
      sq.add(std::norm(tr));
    }
    CHECK(std::abs(re.mean()) < 3 * re.std_error());
    CHECK(std::abs(im.mean()) < 3 * im.std_error());
    CHECK(std::abs(sq.mean() - 1.0) < 3 * sq.std_error());
  }
}

TEST_CASE("lambda_at examples") {
  EigenAngles zeros{{0.0, 0.0}};
  CHECK(std::abs(lambda_at(zeros, 0.5) - 0.25) < 1e-15);
  EigenAngles pi{{std::numbers::pi}};
  CHECK(std::abs(lambda_at(pi, 1.0) - 2.0) < 1e-15);
  EigenAngles quarter{{std::numbers::pi / 2}};
  CHECK(std::abs(lambda_at(quarter, std::complex<double>(0, 1))) < 1e-15);
}

TEST_CASE("lambda_at is invariant under permutation of the angles") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto e = random_angles(rng, 12);
    const std::complex<double> s(0.3, -0.8);
    const auto before = lambda_at(e, s);
    std::shuffle(e.angles.begin(), e.angles.end(), rng);
    CHECK(std::abs(lambda_at(e, s) - before) <= 1e-12 * std::abs(before));
  }
}

TEST_CASE("lambda_log_derivative examples and poles") {
  EigenAngles one{{0.0}};
  CHECK(std::abs(lambda_log_derivative(one, 0.5) + 2.0) < 1e-15);
  EigenAngles zeros{{0.0, 0.0, 0.0}};
  const std::complex<double> s(0.2, 0.4);
  CHECK(std::abs(lambda_log_derivative(zeros, s) + 3.0 / (1.0 - s)) < 1e-14);
  CHECK_THROWS_AS(lambda_log_derivative(one, 1.0), PoleError);
}

TEST_CASE("lambda_log_derivative matches a finite difference of log lambda") {
  const unsigned bits = 256;
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_angles(rng, 10);
    const BigComplex s(std::complex<double>(0.7, 0.2), bits);
    const BigComplex h(BigReal::from_string("1e-6", bits), BigReal(bits));
    const BigComplex fd = (log(lambda_at(e, s + h)) - log(lambda_at(e, s - h))) / (h * 2L);
    const BigComplex exact = lambda_log_derivative(e, s);
    CHECK((abs(fd - exact) / abs(exact)).to_double() < 1e-6);
    CHECK(std::abs(lambda_log_derivative(e, s.to_complex()) - exact.to_complex()) < 1e-12 * abs(exact).to_double());
  }
}

TEST_CASE("z_and_zprime against the real product and a numerical derivative") {
  EigenAngles pi{{std::numbers::pi}};
  CHECK(std::abs(z_and_zprime(pi).z - 2.0) < 1e-15);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 9;
    const auto e = sample_eigenangles(n, rng());
    const auto zv = z_and_zprime(e);
    double product = 1;
    for (double t : e.angles) product *= 2.0 * std::sin(t / 2.0);
    CHECK(std::abs(zv.z - product) < 1e-12 * std::max(1.0, std::abs(product)));
    CHECK(std::abs(std::abs(zv.z) - std::abs(lambda_at(e, 1.0))) < 1e-12 * std::max(1.0, std::abs(zv.z)));

    // d/dphi Z(e^{i phi}) = i Z'(1) at phi = 0, with Z(e^{i phi}) = prod 2 sin((t - phi)/2)
    auto z_on_circle = [&](double phi) {
      double p = 1;
      for (double t : e.angles) p *= 2.0 * std::sin((t - phi) / 2.0);
      return p;
    };
    const double h = 1e-5;
    const double dphi = (z_on_circle(h) - z_on_circle(-h)) / (2 * h);
    const std::complex<double> expected(0.0, -dphi);  // Z'(1) = -i dZ/dphi
    CHECK(std::abs(zv.zprime - expected) < 1e-6 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("estimate_moment basics") {
  const auto trivial = estimate_moment(MomentSpec::abs_lambda_power(0), 6, 50, 3, 1);
  CHECK(trivial.mean == 1.0);
  CHECK(trivial.std_error == 0.0);
  CHECK(trivial.samples == 50);
  CHECK_THROWS(estimate_moment(MomentSpec::abs_lambda_power(2), 6, 1, 3, 1));
  CHECK_THROWS(MomentSpec::mixed_z(1, 2));
  CHECK_THROWS(MomentSpec::logderiv(1, 0.0));

  const auto z2 = estimate_moment(MomentSpec::mixed_z(1, 1), 10, 20000, 17);
  CHECK(std::abs(z2.mean - 11.0) < 3 * z2.std_error);
}

TEST_CASE("estimate_moment is independent of the worker count") {
  const auto spec = MomentSpec::logderiv(1, 0.5);
  const auto one = estimate_moment(spec, 8, 301, 123, 1);
  const auto three = estimate_moment(spec, 8, 301, 123, 3);
  const auto four = estimate_moment(spec, 8, 301, 123, 4);
  CHECK(one.mean == three.mean);
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);
}
