#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulis/enumerate.hpp"
#include "ulis/numeric.hpp"

namespace ulis {

/// Truncated formal power series with exact rational coefficients.
///
/// The truncation order is explicit in every constructor; arithmetic results
/// carry the minimum of the operand orders, and reading a coefficient beyond
/// the order throws instead of pretending it is zero.
class PowerSeries {
 public:
  explicit PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    coef_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  }

  static PowerSeries constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.coef_[0] = c;
    return s;
  }

  /// z, truncated at `order`.
  static PowerSeries variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coef_[1] = 1;
    return s;
  }

  static PowerSeries from_coefficients(std::vector<Rational> coefficients) {
    if (coefficients.empty()) {
      throw std::invalid_argument("PowerSeries: need at least the constant coefficient");
    }
    PowerSeries s(static_cast<int>(coefficients.size()) - 1);
    s.coef_ = std::move(coefficients);
    return s;
  }

  int order() const { return static_cast<int>(coef_.size()) - 1; }

  const Rational& operator[](int k) const {
    check_index(k);
    return coef_[static_cast<std::size_t>(k)];
  }

  Rational& at(int k) {
    check_index(k);
    return coef_[static_cast<std::size_t>(k)];
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.coef_[static_cast<std::size_t>(k)] = a[k] + b[k];
    return r;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.coef_[static_cast<std::size_t>(k)] = a[k] - b[k];
    return r;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= r.order(); ++j) {
        if (b[j] == 0) continue;
        r.coef_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return r;
  }

  /// Formal division; requires a nonzero constant term in the divisor.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b[0] == 0) {
      throw std::invalid_argument("PowerSeries: division by a series with zero constant term");
    }
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
      Rational acc = a[k];
      for (int i = 1; i <= k; ++i) acc -= b[i] * r.coef_[static_cast<std::size_t>(k - i)];
      r.coef_[static_cast<std::size_t>(k)] = acc / b[0];
    }
    return r;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  bool is_zero() const {
    for (const Rational& c : coef_)
      if (c != 0) return false;
    return true;
  }

 private:
  void check_index(int k) const {
    if (k < 0 || k > order()) {
      throw std::out_of_range("PowerSeries: coefficient " + std::to_string(k) +
                              " beyond truncation order " + std::to_string(order()));
    }
  }

  std::vector<Rational> coef_;
};

/// True when every stored coefficient is an integer.
inline bool has_integer_coefficients(const PowerSeries& s) {
  for (int k = 0; k <= s.order(); ++k) {
    if (denominator(s[k]) != 1) return false;
  }
  return true;
}

inline Integer integer_coefficient(const PowerSeries& s, int k) {
  const Rational& c = s[k];
  if (denominator(c) != 1) {
    throw std::logic_error("PowerSeries: coefficient " + std::to_string(k) + " is not an integer");
  }
  return numerator(c);
}

/// Square root with constant term +1, by undetermined coefficients degree by
/// degree: s_k = (a_k - sum_{0<i<k} s_i s_{k-i}) / 2.
inline PowerSeries ps_sqrt(const PowerSeries& a) {
  if (a[0] != 1) {
    throw std::invalid_argument("ps_sqrt: constant term must be 1");
  }
  PowerSeries s(a.order());
  s.at(0) = 1;
  for (int k = 1; k <= a.order(); ++k) {
    Rational acc = a[k];
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s.at(k) = acc / 2;
  }
  return s;
}

/// The unique formal solution with constant term 1 of
///   u = u z (u - z) + 1,
/// computed by fixed-point iteration; each pass determines one further
/// coefficient, so order+1 passes settle the whole truncation.
inline PowerSeries solve_u231(int order) {
  const PowerSeries one = PowerSeries::constant(1, order);
  const PowerSeries z = PowerSeries::variable(order);
  PowerSeries u = one;
  for (int pass = 0; pass <= order; ++pass) {
    u = one + z * (u * (u - z));
  }
  return u;
}

/// Expansion of (1 + z^2 - sqrt(1 - 4z + 2z^2 + z^4)) / (2z). The constant
/// term of the numerator must cancel exactly; anything else indicates an
/// arithmetic bug, not bad input.
inline PowerSeries closed_form_u231(int order) {
  if (order < 0) throw std::invalid_argument("closed_form_u231: negative order");
  const int m = order + 1;
  PowerSeries radicand(m);
  radicand.at(0) = 1;
  if (m >= 1) radicand.at(1) = -4;
  if (m >= 2) radicand.at(2) = 2;
  if (m >= 4) radicand.at(4) = 1;
  PowerSeries numerator_series(m);
  numerator_series.at(0) = 1;
  if (m >= 2) numerator_series.at(2) = 1;
  numerator_series = numerator_series - ps_sqrt(radicand);
  if (numerator_series[0] != 0) {
    throw std::logic_error("closed_form_u231: numerator constant term failed to cancel");
  }
  PowerSeries out(order);
  for (int k = 0; k <= order; ++k) out.at(k) = numerator_series[k + 1] / 2;
  return out;
}

/// Given a total series u with u(0) = 1, returns the indecomposable-part
/// series u1 = 1 - 1/u, so that u = 1/(1 - u1).
inline PowerSeries indecomposable_from_total(const PowerSeries& u) {
  if (u[0] != 1) {
    throw std::invalid_argument("indecomposable_from_total: constant term must be 1");
  }
  const PowerSeries one = PowerSeries::constant(1, u.order());
  return one - one / u;
}

namespace detail {

inline Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sign_of(const Rational& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

}  // namespace detail

/// Bisection root of the polynomial (coefficients low degree first) inside
/// (lo, hi). Sign evaluation is exact rational arithmetic; only the returned
/// midpoint is rounded. Requires opposite signs at the endpoints and stops
/// once the bracket is narrower than tol.
inline double find_real_root(const std::vector<Rational>& poly, double lo, double hi,
                             double tol) {
  if (!(tol > 0)) throw std::invalid_argument("find_real_root: tol must be positive");
  if (!(lo < hi)) throw std::invalid_argument("find_real_root: need lo < hi");
  Rational a(lo);
  Rational b(hi);
  const int sa = detail::sign_of(detail::eval_poly(poly, a));
  const int sb = detail::sign_of(detail::eval_poly(poly, b));
  if (sa == 0 || sb == 0 || sa == sb) {
    throw std::invalid_argument("find_real_root: invalid bracket, need poly(lo)*poly(hi) < 0");
  }
  while (to_double(b - a) > tol) {
    const Rational mid = (a + b) / 2;
    const int sm = detail::sign_of(detail::eval_poly(poly, mid));
    if (sm == 0) return to_double(mid);
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return to_double((a + b) / 2);
}

/// (n, count^(1/n)) rows for every n >= 1 in the table; the finite-range
/// diagnostic behind exponential-growth statements.
inline std::vector<std::pair<int, double>> growth_profile(const CountTable& counts) {
  std::vector<std::pair<int, double>> out;
  for (const auto& [n, c] : counts.rows) {
    if (c <= 0) {
      throw std::invalid_argument("growth_profile: counts must be positive, got row n=" +
                                  std::to_string(n));
    }
    if (n < 1) continue;  // no nth root to take at n = 0
    out.emplace_back(n, std::pow(to_double(c), 1.0 / n));
  }
  return out;
}

}  // namespace ulis
