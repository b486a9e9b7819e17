#include "moments/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace moments {

namespace {

TruncatedSeries1 resized(const TruncatedSeries1& s, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= std::min(order, s.order()); ++i) c[static_cast<size_t>(i)] = s[i];
  return TruncatedSeries1(std::move(c));
}

void require_same_cap(const TruncatedSeries2& a, const TruncatedSeries2& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("TruncatedSeries2: mismatched caps");
}

}  // namespace

TruncatedSeries1::TruncatedSeries1(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries1: negative order");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries1::TruncatedSeries1(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries1: empty coefficient list");
}

TruncatedSeries1 TruncatedSeries1::constant(const Rational& value, int order) {
  TruncatedSeries1 s(order);
  s[0] = value;
  return s;
}

TruncatedSeries1 TruncatedSeries1::variable(int order) {
  TruncatedSeries1 s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

TruncatedSeries1 TruncatedSeries1::exponential(const Rational& c, int order) {
  TruncatedSeries1 s(order);
  Rational term = 1;
  for (int i = 0; i <= order; ++i) {
    s[i] = term;
    term *= c / (i + 1);
  }
  return s;
}

TruncatedSeries1 TruncatedSeries1::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("TruncatedSeries1: cannot extend beyond the cap");
  return resized(*this, order);
}

BigReal TruncatedSeries1::evaluate(const BigReal& x) const {
  BigReal acc(x.precision());
  for (int i = order(); i >= 0; --i) acc = acc * x + BigReal(coeffs_[static_cast<size_t>(i)], x.precision());
  return acc;
}

double TruncatedSeries1::evaluate(double x) const { return evaluate(BigReal(x, 128)).to_double(); }

TruncatedSeries1& TruncatedSeries1::operator+=(const TruncatedSeries1& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries1& TruncatedSeries1::operator-=(const TruncatedSeries1& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries1& TruncatedSeries1::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncatedSeries1 TruncatedSeries1::operator-() const {
  TruncatedSeries1 out = *this;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

TruncatedSeries1 operator+(TruncatedSeries1 a, const TruncatedSeries1& b) { return a += b; }
TruncatedSeries1 operator-(TruncatedSeries1 a, const TruncatedSeries1& b) { return a -= b; }

TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries1 out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries1 operator*(TruncatedSeries1 a, const Rational& c) { return a *= c; }
TruncatedSeries1 operator*(const Rational& c, TruncatedSeries1 a) { return a *= c; }

TruncatedSeries1 series_derivative(const TruncatedSeries1& series, int k) {
  if (k < 0 || k > series.order()) throw std::invalid_argument("series_derivative: k out of range");
  TruncatedSeries1 out(series.order() - k);
  for (int i = 0; i <= out.order(); ++i) {
    Integer falling = 1;
    for (int j = 0; j < k; ++j) falling *= i + k - j;
    out[i] = series[i + k] * falling;
  }
  return out;
}

TruncatedSeries1 series_integral(const TruncatedSeries1& series) {
  TruncatedSeries1 out(series.order() + 1);
  for (int i = 0; i <= series.order(); ++i) out[i + 1] = series[i] / (i + 1);
  return out;
}

TruncatedSeries1 series_inverse(const TruncatedSeries1& f) {
  if (f[0] == 0) throw std::domain_error("series_inverse: zero constant term");
  const int n = f.order();
  TruncatedSeries1 g = TruncatedSeries1::constant(1 / f[0], 0);
  int prec = 1;
  while (prec <= n) {
    prec = std::min(2 * prec, n + 1);
    const TruncatedSeries1 g_ext = resized(g, prec - 1);
    const TruncatedSeries1 two = TruncatedSeries1::constant(2, prec - 1);
    g = g_ext * (two - f.truncated(prec - 1) * g_ext);
  }
  return g;
}

TruncatedSeries1 series_log(const TruncatedSeries1& f) {
  if (f[0] != 1) throw std::domain_error("series_log: constant term must be 1");
  if (f.order() == 0) return TruncatedSeries1(0);
  return series_integral(series_derivative(f, 1) * series_inverse(f));
}

TruncatedSeries1 series_exp(const TruncatedSeries1& f) {
  if (f[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
  const int n = f.order();
  TruncatedSeries1 g = TruncatedSeries1::constant(1, 0);
  int prec = 1;
  while (prec <= n) {
    prec = std::min(2 * prec, n + 1);
    const TruncatedSeries1 g_ext = resized(g, prec - 1);
    TruncatedSeries1 step = f.truncated(prec - 1) - series_log(g_ext);
    step[0] += 1;
    g = g_ext * step;
  }
  return g;
}

// ---------------------------------------------------------------------------

TruncatedSeries2::TruncatedSeries2(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("TruncatedSeries2: negative cap");
}

TruncatedSeries2 TruncatedSeries2::constant(const Rational& value, int cap) {
  TruncatedSeries2 s(cap);
  s.add_term(0, 0, value);
  return s;
}

TruncatedSeries2 TruncatedSeries2::t1(int cap) {
  TruncatedSeries2 s(cap);
  s.add_term(1, 0, 1);
  return s;
}

TruncatedSeries2 TruncatedSeries2::t2(int cap) {
  TruncatedSeries2 s(cap);
  s.add_term(0, 1, 1);
  return s;
}

Rational TruncatedSeries2::coefficient(int m, int n) const {
  if (m + n > cap_) throw std::out_of_range("TruncatedSeries2: coefficient beyond cap");
  const auto it = terms_.find({m, n});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries2::add_term(int m, int n, const Rational& c) {
  if (m < 0 || n < 0) throw std::invalid_argument("TruncatedSeries2: negative exponent");
  if (m + n > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace({m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TruncatedSeries2::total_degree() const {
  int degree = -1;
  for (const auto& [key, value] : terms_) degree = std::max(degree, key.first + key.second);
  return degree;
}

TruncatedSeries2 TruncatedSeries2::restricted(int cap) const {
  if (cap > cap_) throw std::invalid_argument("TruncatedSeries2: cannot extend beyond the cap");
  TruncatedSeries2 out(cap);
  for (const auto& [key, value] : terms_) out.add_term(key.first, key.second, value);
  return out;
}

std::complex<double> TruncatedSeries2::evaluate(std::complex<double> t1, std::complex<double> t2) const {
  std::complex<double> acc = 0;
  for (const auto& [key, value] : terms_) acc += value.get_d() * std::pow(t1, key.first) * std::pow(t2, key.second);
  return acc;
}

std::string TruncatedSeries2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << value.get_str();
    if (key.first > 0) os << "*t1^" << key.first;
    if (key.second > 0) os << "*t2^" << key.second;
  }
  return os.str();
}

TruncatedSeries2& TruncatedSeries2::operator+=(const TruncatedSeries2& rhs) {
  require_same_cap(*this, rhs);
  for (const auto& [key, value] : rhs.terms_) add_term(key.first, key.second, value);
  return *this;
}

TruncatedSeries2& TruncatedSeries2::operator-=(const TruncatedSeries2& rhs) {
  require_same_cap(*this, rhs);
  for (const auto& [key, value] : rhs.terms_) add_term(key.first, key.second, -value);
  return *this;
}

TruncatedSeries2& TruncatedSeries2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

TruncatedSeries2 TruncatedSeries2::operator-() const {
  TruncatedSeries2 out = *this;
  for (auto& [key, value] : out.terms_) value = -value;
  return out;
}

TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b) { return a += b; }
TruncatedSeries2 operator-(TruncatedSeries2 a, const TruncatedSeries2& b) { return a -= b; }

TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b) {
  require_same_cap(a, b);
  TruncatedSeries2 out(a.cap());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      if (ka.first + kb.first + ka.second + kb.second <= a.cap()) {
        out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
      }
    }
  }
  return out;
}

TruncatedSeries2 operator*(TruncatedSeries2 a, const Rational& c) { return a *= c; }
TruncatedSeries2 operator*(const Rational& c, TruncatedSeries2 a) { return a *= c; }

}  // namespace moments
