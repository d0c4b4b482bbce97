#pragma once

#include <vector>

#include "cycle.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace chowmot {

/// Truncated univariate power series a_0 + a_1 x + ... + a_N x^N over Q.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}  // NOLINT

  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  /// exp(x) to the given order.
  static PowerSeries exponential(int order) {
    PowerSeries out(order);
    for (int k = 0; k <= order; ++k) out[k] = Rational(1) / factorial(k);
    return out;
  }

  /// 1/a, requires a_0 != 0.
  [[nodiscard]] PowerSeries inverse() const {
    if ((*this)[0].is_zero()) throw singular_series("power series with zero constant term");
    PowerSeries out(order());
    out[0] = Rational(1) / (*this)[0];
    for (int n = 1; n <= order(); ++n) {
      Rational s;
      for (int k = 1; k <= n; ++k) s += (*this)[k] * out[n - k];
      out[n] = -s * out[0];
    }
    return out;
  }

  /// log(a) for a_0 = 1, via (log a)' = a'/a.
  [[nodiscard]] PowerSeries log() const {
    if ((*this)[0] != Rational(1)) throw domain_error("log of a series with constant term != 1");
    const int n = order();
    PowerSeries deriv(n);
    for (int k = 1; k <= n; ++k) deriv[k - 1] = Rational(k) * (*this)[k];
    PowerSeries q = deriv * inverse();
    PowerSeries out(n);
    for (int k = 1; k <= n; ++k) out[k] = q[k - 1] / Rational(k);
    return out;
  }

  /// exp(a) for a_0 = 0, via g' = a' g.
  [[nodiscard]] PowerSeries exp() const {
    if (!(*this)[0].is_zero()) throw domain_error("exp of a series with nonzero constant term");
    const int n = order();
    PowerSeries out(n);
    out[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
      Rational s;
      for (int k = 1; k <= m; ++k) s += Rational(k) * (*this)[k] * out[m - k];
      out[m] = s / Rational(m);
    }
    return out;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// sum_k s_k n^k for a cycle n without constant term. Terms beyond dim X vanish.
inline Cycle evaluate_series(const PowerSeries& s, const Cycle& n) {
  if (!n.constant_term().is_zero()) throw domain_error("series argument must have zero constant term");
  const int top = std::min(s.order(), n.variety().dim());
  Cycle acc = Cycle::constant(n.variety(), s[top]);
  for (int k = top - 1; k >= 0; --k) acc = intersect(acc, n) + Cycle::constant(n.variety(), s[k]);
  return acc;
}

/// exp(n) for n without constant term.
inline Cycle cycle_exp(const Cycle& n) {
  return evaluate_series(PowerSeries::exponential(n.variety().dim()), n);
}

/// log(u) for u with constant term 1.
inline Cycle cycle_log(const Cycle& u) {
  if (u.constant_term() != Rational(1)) throw domain_error("log of a cycle with constant term != 1");
  const int d = u.variety().dim();
  PowerSeries log1p(d);
  for (int k = 1; k <= d; ++k) log1p[k] = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
  return evaluate_series(log1p, u - Cycle::one(u.variety()));
}

/// The unique v with u . v = 1; requires a nonzero constant term.
inline Cycle series_inverse(const Cycle& u) {
  const Rational c = u.constant_term();
  if (c.is_zero()) throw singular_series("series_inverse: constant term is zero");
  const Rational c_inv = Rational(1) / c;
  const Cycle nil = c_inv * u - Cycle::one(u.variety());
  const int d = u.variety().dim();
  PowerSeries geometric(d);
  for (int k = 0; k <= d; ++k) geometric[k] = Rational(k % 2 == 0 ? 1 : -1);
  return c_inv * evaluate_series(geometric, nil);
}

}  // namespace chowmot
