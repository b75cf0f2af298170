#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace taylorwave {

// A spatial coefficient function written as a polynomial in w = tanh(x):
//
//   p(x) = c_0 + c_1 w + ... + c_d w^d.
//
// The set is a ring closed under d/dx because dw/dx = 1 - w^2. Trailing zero
// coefficients are stripped on construction, so the zero polynomial is
// exactly {0} and degree() is well defined.
class tanh_poly {
public:
  tanh_poly() : c_{0.0} {}
  explicit tanh_poly(double constant) : c_{constant} {}
  tanh_poly(std::initializer_list<double> coeffs) : c_(coeffs) { normalize(); }
  explicit tanh_poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static tanh_poly w() { return tanh_poly{0.0, 1.0}; }

  std::size_t degree() const noexcept { return c_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return c_; }
  double operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0.0; }
  bool is_zero() const noexcept { return c_.size() == 1 && c_[0] == 0.0; }

  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  // Horner in w; |p(x)| <= sum |c_k| for real x.
  double eval_w(double w) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
  }

  double eval(double x) const noexcept { return eval_w(std::tanh(x)); }

  // d/dx p = (1 - w^2) p'(w).
  tanh_poly dx() const {
    if (c_.size() == 1) return tanh_poly{};
    std::vector<double> out(c_.size() + 1, 0.0);
    for (std::size_t k = 1; k < c_.size(); ++k) {
      const double kc = static_cast<double>(k) * c_[k];
      out[k - 1] += kc;
      out[k + 1] -= kc;
    }
    return tanh_poly(std::move(out));
  }

  tanh_poly dx(unsigned order) const {
    tanh_poly r = *this;
    for (unsigned i = 0; i < order; ++i) r = r.dx();
    return r;
  }

  tanh_poly& operator+=(const tanh_poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }

  tanh_poly& operator-=(const tanh_poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }

  tanh_poly& operator*=(double s) {
    for (double& v : c_) v *= s;
    normalize();
    return *this;
  }

  tanh_poly& operator/=(double s) {
    for (double& v : c_) v /= s;
    normalize();
    return *this;
  }

  friend tanh_poly operator+(tanh_poly a, const tanh_poly& b) { return a += b; }
  friend tanh_poly operator-(tanh_poly a, const tanh_poly& b) { return a -= b; }
  friend tanh_poly operator-(tanh_poly a) { return a *= -1.0; }
  friend tanh_poly operator*(tanh_poly a, double s) { return a *= s; }
  friend tanh_poly operator*(double s, tanh_poly a) { return a *= s; }
  friend tanh_poly operator/(tanh_poly a, double s) { return a /= s; }

  // Exact convolution of the coefficient lists.
  friend tanh_poly operator*(const tanh_poly& a, const tanh_poly& b) {
    if (a.is_zero() || b.is_zero()) return tanh_poly{};
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return tanh_poly(std::move(out));
  }

  friend bool operator==(const tanh_poly&, const tanh_poly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const tanh_poly& p) {
    os << '[';
    for (std::size_t k = 0; k < p.c_.size(); ++k) os << (k ? ", " : "") << p.c_[k];
    return os << ']';
  }

private:
  void normalize() {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
  }

  std::vector<double> c_;
};

inline tanh_poly poly_mul(const tanh_poly& p, const tanh_poly& q) { return p * q; }
inline tanh_poly poly_dx(const tanh_poly& p) { return p.dx(); }
inline double poly_eval(const tanh_poly& p, double x) { return p.eval(x); }

}  // namespace taylorwave
