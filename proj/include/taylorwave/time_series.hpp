#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "errors.hpp"
#include "tanh_poly.hpp"

namespace taylorwave {

// Coefficient ring for a truncated series: value-initialized to zero, closed
// under +, -, *, and divisible by a real scalar.
template <typename C>
concept series_coefficient = std::regular<C> && requires(C a, C b, double s) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a / s } -> std::convertible_to<C>;
};

// Truncated power series in t,  sum_{j=0}^{N} u_j t^j.  Holds exactly N+1
// coefficients; nothing beyond index N is ever read or invented.
template <series_coefficient C>
class time_series {
public:
  using coefficient_type = C;

  time_series() : c_(1) {}
  time_series(std::initializer_list<C> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.emplace_back();
  }
  explicit time_series(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back();
  }

  static time_series constant(const C& value, std::size_t order) {
    std::vector<C> c(order + 1);
    c[0] = value;
    return time_series(std::move(c));
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  const C& operator[](std::size_t j) const { return c_.at(j); }

  void push_back(C c) { c_.push_back(std::move(c)); }

  time_series truncated(std::size_t n) const {
    if (n > order()) throw truncation_too_deep(n, order());
    return time_series(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n) + 1));
  }

  template <typename F>
  time_series map(F&& f) const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const C& c : c_) out.push_back(f(c));
    return time_series(std::move(out));
  }

  friend time_series operator+(const time_series& a, const time_series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out[j] = a.c_[j] + b.c_[j];
    return time_series(std::move(out));
  }

  friend time_series operator-(const time_series& a, const time_series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out[j] = a.c_[j] - b.c_[j];
    return time_series(std::move(out));
  }

  friend time_series operator-(const time_series& a) {
    return a.map([](const C& c) { return C{} - c; });
  }

  friend bool operator==(const time_series&, const time_series&) = default;

private:
  std::vector<C> c_;
};

// Cauchy product truncated at order n:  (AB)_j = sum_{i<=j} A_i B_{j-i}.
template <series_coefficient C>
time_series<C> series_mul(const time_series<C>& a, const time_series<C>& b, std::size_t n) {
  if (n > a.order()) throw truncation_too_deep(n, a.order());
  if (n > b.order()) throw truncation_too_deep(n, b.order());
  std::vector<C> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    C acc{};
    for (std::size_t i = 0; i <= j; ++i) acc = acc + a[i] * b[j - i];
    out[j] = std::move(acc);
  }
  return time_series<C>(std::move(out));
}

// Term-by-term antiderivative with zero constant; raises the order by one.
template <series_coefficient C>
time_series<C> series_integrate_t(const time_series<C>& a) {
  std::vector<C> out(a.order() + 2);
  for (std::size_t j = 0; j <= a.order(); ++j) out[j + 1] = a[j] / static_cast<double>(j + 1);
  return time_series<C>(std::move(out));
}

// Term-by-term derivative; lowers the order by one (order 0 gives the zero series).
template <series_coefficient C>
time_series<C> series_derivative_t(const time_series<C>& a) {
  if (a.order() == 0) return time_series<C>{};
  std::vector<C> out(a.order());
  for (std::size_t j = 1; j <= a.order(); ++j) out[j - 1] = a[j] * C(static_cast<double>(j));
  return time_series<C>(std::move(out));
}

// Degree-N partial sum, Horner in t. Says nothing about convergence.
inline double series_eval(const time_series<double>& a, double t) {
  double acc = 0.0;
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline double series_eval(const time_series<tanh_poly>& a, double x, double t) {
  const double w = std::tanh(x);
  double acc = 0.0;
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + it->eval_w(w);
  return acc;
}

// Scalar coefficients u_j(x) of a spatial series at a fixed x.
inline time_series<double> series_at(const time_series<tanh_poly>& a, double x) {
  const double w = std::tanh(x);
  std::vector<double> out;
  out.reserve(a.order() + 1);
  for (const auto& p : a.coeffs()) out.push_back(p.eval_w(w));
  return time_series<double>(std::move(out));
}

}  // namespace taylorwave
