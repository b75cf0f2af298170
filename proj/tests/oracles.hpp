#pragma once

// Reference computations used only by the tests. None of them goes through the
// library's series arithmetic, parser or recurrences.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <taylorwave/tanh_poly.hpp>

namespace oracle {

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Taylor coefficients of f about 0 from the Cauchy integral
//   c_j = 1/(2 pi r^j) int_0^{2pi} f(r e^{i theta}) e^{-i j theta} d theta,
// evaluated with the periodic trapezoid rule (geometrically convergent for r
// inside the disc of analyticity).
inline std::vector<double> cauchy_coefficients(const std::function<std::complex<double>(std::complex<double>)>& f,
                                               double r, std::size_t order, std::size_t nodes = 512) {
  std::vector<double> c(order + 1, 0.0);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    const auto z = std::polar(r, theta);
    const auto fz = f(z);
    for (std::size_t j = 0; j <= order; ++j)
      c[j] += (fz * std::polar(1.0, -static_cast<double>(j) * theta)).real();
  }
  for (std::size_t j = 0; j <= order; ++j) c[j] /= static_cast<double>(nodes) * std::pow(r, static_cast<double>(j));
  return c;
}

// Maclaurin coefficients of tanh(s) from the Bernoulli numbers,
//   tanh s = sum_{n>=1} 2^{2n} (2^{2n} - 1) B_{2n} / (2n)! s^{2n-1}.
inline std::vector<long double> tanh_maclaurin(std::size_t order) {
  // Tangent numbers by the Knuth-Buckholtz recurrence (all terms positive, so
  // no cancellation); tanh t = sum (-1)^(k-1) T_k t^(2k-1) / (2k-1)!.
  const std::size_t n = (order + 1) / 2;
  std::vector<long double> T(n + 1, 0.0L);
  if (n >= 1) T[1] = 1.0L;
  for (std::size_t k = 2; k <= n; ++k) T[k] = static_cast<long double>(k - 1) * T[k - 1];
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = k; j <= n; ++j)
      T[j] = static_cast<long double>(j - k) * T[j - 1] + static_cast<long double>(j - k + 2) * T[j];

  std::vector<long double> c(order + 1, 0.0L);
  long double fact = 1.0L;  // (2k-1)!
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) fact *= static_cast<long double>((2 * k - 2) * (2 * k - 1));
    c[2 * k - 1] = (k % 2 ? 1.0L : -1.0L) * T[k] / fact;
  }
  return c;
}

// Small random tanh polynomials with integer coefficients; products and
// derivatives of these stay exactly representable.
inline taylorwave::tanh_poly random_int_poly(std::mt19937& rng, std::size_t max_degree = 4, int range = 5) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<double> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return taylorwave::tanh_poly(std::move(c));
}

inline taylorwave::tanh_poly random_real_poly(std::mt19937& rng, std::size_t max_degree = 4) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::vector<double> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return taylorwave::tanh_poly(std::move(c));
}

inline bool close_rel(double a, double b, double rtol, double floor = 0.0) {
  return std::abs(a - b) <= rtol * std::max({std::abs(a), std::abs(b), floor});
}

// Scale of Horner evaluation of p at w: sum |c_k| |w|^k.
inline double eval_scale(const taylorwave::tanh_poly& p, double x) {
  const double w = std::abs(std::tanh(x));
  double s = 0.0, wk = 1.0;
  for (double c : p.coeffs()) {
    s += std::abs(c) * wk;
    wk *= w;
  }
  return s;
}

}  // namespace oracle
