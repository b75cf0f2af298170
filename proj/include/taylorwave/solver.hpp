#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pde_dsl.hpp"
#include "tanh_poly.hpp"
#include "time_series.hpp"

namespace taylorwave {

struct series_solution {
  pde_system system;
  std::size_t order = 0;
  std::vector<time_series<tanh_poly>> series;
  std::vector<tanh_poly> initial;

  series_solution() = default;

  // Wrap externally built series (e.g. an exact expansion) for residual checks.
  series_solution(pde_system sys, std::vector<time_series<tanh_poly>> s) : system(std::move(sys)), series(std::move(s)) {
    if (series.size() != system.size())
      throw dimension_mismatch("got " + std::to_string(series.size()) + " series for " + std::to_string(system.size()) +
                               " fields");
    order = series.empty() ? 0 : series.front().order();
    for (const auto& x : series) order = std::min(order, x.order());
    for (auto& x : series) x = x.truncated(order);
    for (const auto& x : series) initial.push_back(x[0]);
  }
};

// Taylor coefficients in t of the solution of  d/dt u = f(u),  u(x,0) = init.
//
// Substituting the series into both sides and matching powers of t gives
//
//   (j + 1) u_{j+1} = [f(u_0 + ... + u_j t^j)]_j,
//
// where the right side only needs coefficients up to j. Each step re-evaluates
// f on the current truncation, so the total cost is O(N^2) evaluations of f.
inline series_solution solve(const pde_system& sys, const std::vector<tanh_poly>& init, std::size_t order) {
  if (init.size() != sys.size())
    throw dimension_mismatch("initial data has " + std::to_string(init.size()) + " fields, system has " +
                             std::to_string(sys.size()));
  if (order < 1) throw config_error("solve needs order >= 1");

  std::vector<time_series<tanh_poly>> state;
  state.reserve(init.size());
  for (const auto& p : init) state.emplace_back(std::vector<tanh_poly>{p});

  for (std::size_t j = 0; j < order; ++j) {
    const auto f = eval_rhs(sys, state, j);
    for (std::size_t i = 0; i < state.size(); ++i) state[i].push_back(f[i][j] / static_cast<double>(j + 1));
  }

  series_solution sol;
  sol.system = sys;
  sol.order = order;
  sol.series = std::move(state);
  sol.initial = init;
  return sol;
}

// Largest coefficient of  d/dt u - f(u)  over all fields and orders 0..N-1.
// Order j is measured in units of max(1, |f_j|_inf): the coefficients grow
// like R^-j, so at order 20 a single rounding in (j+1) * (F_j / (j+1)) is
// already far above any fixed absolute threshold.
inline double residual(const pde_system& sys, const series_solution& sol) {
  if (sol.order == 0) return 0.0;
  const std::size_t n = sol.order - 1;
  const auto f = eval_rhs(sys, sol.series, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto lhs = series_derivative_t(sol.series[i]);
    for (std::size_t j = 0; j <= n; ++j) {
      const double scale = std::max(1.0, f[i][j].max_abs());
      worst = std::max(worst, (lhs[j] - f[i][j]).max_abs() / scale);
    }
  }
  return worst;
}

}  // namespace taylorwave
