#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tanh_poly.hpp"
#include "time_series.hpp"

namespace taylorwave {

// a + b tanh(k x - omega t).
struct traveling_wave {
  double a = 0.0;
  double b = 1.0;
  double k = 1.0;
  double omega = 0.0;

  friend bool operator==(const traveling_wave&, const traveling_wave&) = default;
};

struct named_wave {
  std::string name;
  traveling_wave wave;
};

// The three tanh waves of the coupled system, all moving at speed 11/2:
//   u = 1 + tanh(x - 11t/2)/2,  v = 1 - tanh(x - 11t/2)/4,  z = 2 - tanh(x - 11t/2).
inline std::array<named_wave, 3> reference_waves() {
  constexpr double speed = 11.0 / 2.0;
  return {{{"u", {1.0, 0.5, 1.0, speed}}, {"v", {1.0, -0.25, 1.0, speed}}, {"z", {2.0, -1.0, 1.0, speed}}}};
}

inline double wave_eval(const traveling_wave& w, double x, double t) {
  return w.a + w.b * std::tanh(w.k * x - w.omega * t);
}

// Taylor coefficients in t at fixed x, from the Riccati equation satisfied by
// g(t) = tanh(kx - omega t):  g' = -omega (1 - g^2).  Matching powers of t,
//
//   g_0 = tanh(kx),   g_{j+1} = -omega/(j+1) * (delta_{j0} - (g*g)_j).
//
// Works on plain doubles and shares nothing with the PDE solver.
inline time_series<double> wave_taylor(const traveling_wave& w, double x, std::size_t order) {
  std::vector<double> g(order + 1, 0.0);
  g[0] = std::tanh(w.k * x);
  for (std::size_t j = 0; j < order; ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i <= j; ++i) sq += g[i] * g[j - i];
    g[j + 1] = -w.omega / static_cast<double>(j + 1) * ((j == 0 ? 1.0 : 0.0) - sq);
  }
  std::vector<double> c(order + 1);
  for (std::size_t j = 0; j <= order; ++j) c[j] = w.b * g[j];
  c[0] += w.a;
  return time_series<double>(std::move(c));
}

// Same recurrence carried out over the tanh-polynomial ring (k = 1 only), so
// the whole expansion is available as spatial functions.
inline time_series<tanh_poly> wave_series(const traveling_wave& w, std::size_t order) {
  if (w.k != 1.0) throw config_error("wave_series needs k = 1 (tanh(kx) is not a polynomial in tanh(x) otherwise)");
  std::vector<tanh_poly> g(order + 1);
  g[0] = tanh_poly::w();
  for (std::size_t j = 0; j < order; ++j) {
    tanh_poly sq;
    for (std::size_t i = 0; i <= j; ++i) sq += g[i] * g[j - i];
    g[j + 1] = ((j == 0 ? tanh_poly{1.0} : tanh_poly{}) - sq) * (-w.omega / static_cast<double>(j + 1));
  }
  for (auto& p : g) p *= w.b;
  g[0] += tanh_poly{w.a};
  return time_series<tanh_poly>(std::move(g));
}

// tanh has poles at i(2m+1)pi/2. Solving k x - omega t = +-i pi/2 for t gives
// the nearest complex singularity, at distance sqrt((kx)^2 + pi^2/4) / |omega|.
inline double convergence_radius(const traveling_wave& w, double x) {
  if (w.omega == 0.0) throw degenerate_wave();
  const double kx = w.k * x;
  return std::sqrt(kx * kx + std::numbers::pi * std::numbers::pi / 4.0) / std::abs(w.omega);
}

// Radius of convergence from coefficient ratios (Domb-Sykes). If the series
// is parity-sparse past the constant term (odd or even functions of t) the
// ratios c_j / c_{j-2} are used and the square root taken. The last two
// ratios r(j) are extrapolated linearly in 1/j to 1/j -> 0.
inline double empirical_radius(const time_series<double>& s) {
  if (s.order() < 8) throw insufficient_data("empirical radius needs order >= 8");
  const auto& c = s.coeffs();

  double scale = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j) scale = std::max(scale, std::abs(c[j]));
  if (scale == 0.0) throw insufficient_data("series has no non-constant terms");

  // Coefficients grow geometrically, so sparsity is judged against the
  // neighbours rather than against the largest coefficient.
  auto negligible = [&](std::size_t j) {
    const double left = std::abs(c[j - 1]);
    const double right = j + 1 < c.size() ? std::abs(c[j + 1]) : left;
    return std::abs(c[j]) <= 1e-12 * std::max(left, right);
  };
  std::size_t zero_odd = 0, zero_even = 0, n_odd = 0, n_even = 0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (j % 2) {
      ++n_odd;
      zero_odd += negligible(j);
    } else {
      ++n_even;
      zero_even += negligible(j);
    }
  }
  std::size_t stride = 1;
  std::size_t parity = 0;
  if (zero_even == n_even && zero_odd < n_odd) {
    stride = 2;
    parity = 1;
  } else if (zero_odd == n_odd && zero_even < n_even) {
    stride = 2;
    parity = 0;
  }

  std::vector<std::size_t> idx;
  for (std::size_t j = 1; j < c.size(); ++j)
    if ((stride == 1 || j % 2 == parity) && c[j] != 0.0) idx.push_back(j);
  if (idx.size() < 4) throw insufficient_data("too few nonzero coefficients for a ratio estimate");

  // Trailing run of consecutive (stride-spaced) nonzero coefficients.
  auto ratio = [&](std::size_t j) { return std::abs(c[j] / c[j - stride]); };
  const std::size_t j2 = idx.back();
  const std::size_t j1 = j2 - stride;
  if (j1 < stride || c[j1] == 0.0 || c[j1 - stride] == 0.0)
    throw insufficient_data("trailing coefficients are not consecutive");
  const double r1 = ratio(j1);
  const double r2 = ratio(j2);
  double rinf = (static_cast<double>(j2) * r2 - static_cast<double>(j1) * r1) / static_cast<double>(j2 - j1);
  if (!(rinf > 0.0)) rinf = r2;
  return std::pow(rinf, -1.0 / static_cast<double>(stride));
}

}  // namespace taylorwave
