#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moments/big_real.hpp"
#include "moments/rational.hpp"

namespace moments {

/// Univariate power series with exact coefficients, truncated after x^order.
class TruncatedSeries1 {
 public:
  explicit TruncatedSeries1(int order = 0);
  explicit TruncatedSeries1(std::vector<Rational> coefficients);

  static TruncatedSeries1 constant(const Rational& value, int order);
  /// The series x.
  static TruncatedSeries1 variable(int order);
  /// exp(c x) truncated at order.
  static TruncatedSeries1 exponential(const Rational& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries1 truncated(int order) const;
  BigReal evaluate(const BigReal& x) const;
  double evaluate(double x) const;

  TruncatedSeries1& operator+=(const TruncatedSeries1& rhs);
  TruncatedSeries1& operator-=(const TruncatedSeries1& rhs);
  TruncatedSeries1& operator*=(const Rational& c);
  TruncatedSeries1 operator-() const;

  friend bool operator==(const TruncatedSeries1& a, const TruncatedSeries1& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Binary operations truncate to the smaller of the two orders.
TruncatedSeries1 operator+(TruncatedSeries1 a, const TruncatedSeries1& b);
TruncatedSeries1 operator-(TruncatedSeries1 a, const TruncatedSeries1& b);
TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b);
TruncatedSeries1 operator*(TruncatedSeries1 a, const Rational& c);
TruncatedSeries1 operator*(const Rational& c, TruncatedSeries1 a);

/// k-th formal derivative; the order drops by k. Throws if k exceeds the order.
TruncatedSeries1 series_derivative(const TruncatedSeries1& series, int k);
/// Formal antiderivative with zero constant term; the order rises by one.
TruncatedSeries1 series_integral(const TruncatedSeries1& series);

// Newton iterations on exact coefficients.
TruncatedSeries1 series_inverse(const TruncatedSeries1& f);  // needs f[0] != 0
TruncatedSeries1 series_log(const TruncatedSeries1& f);      // needs f[0] == 1
TruncatedSeries1 series_exp(const TruncatedSeries1& f);      // needs f[0] == 0

/// Bivariate series in (t1, t2) keeping monomials t1^m t2^n with m + n <= cap.
/// Only nonzero coefficients are stored.
class TruncatedSeries2 {
 public:
  using Key = std::pair<int, int>;

  explicit TruncatedSeries2(int cap = 0);

  static TruncatedSeries2 constant(const Rational& value, int cap);
  static TruncatedSeries2 t1(int cap);
  static TruncatedSeries2 t2(int cap);

  int cap() const { return cap_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coefficient(int m, int n) const;
  Rational constant_term() const { return coefficient(0, 0); }
  /// Adds c t1^m t2^n; terms above the cap are dropped.
  void add_term(int m, int n, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  /// Largest m + n with a nonzero coefficient, or -1 for the zero series.
  int total_degree() const;
  TruncatedSeries2 restricted(int cap) const;
  std::complex<double> evaluate(std::complex<double> t1, std::complex<double> t2) const;
  std::string to_string() const;

  TruncatedSeries2& operator+=(const TruncatedSeries2& rhs);
  TruncatedSeries2& operator-=(const TruncatedSeries2& rhs);
  TruncatedSeries2& operator*=(const Rational& c);
  TruncatedSeries2 operator-() const;

  friend bool operator==(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    return a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

 private:
  int cap_;
  std::map<Key, Rational> terms_;
};

// Binary operations require equal caps.
TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b);
TruncatedSeries2 operator-(TruncatedSeries2 a, const TruncatedSeries2& b);
TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b);
TruncatedSeries2 operator*(TruncatedSeries2 a, const Rational& c);
TruncatedSeries2 operator*(const Rational& c, TruncatedSeries2 a);

}  // namespace moments
