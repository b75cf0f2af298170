#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace taylorwave {

// num(t) / den(t) with den[0] == 1.
struct pade_approximant {
  std::vector<double> num;
  std::vector<double> den;

  std::size_t numerator_degree() const noexcept { return num.size() - 1; }
  std::size_t denominator_degree() const noexcept { return den.size() - 1; }
};

// Reciprocal 1-norm condition estimate below which the denominator system is
// reported as degenerate rather than solved.
inline constexpr double pade_rcond_floor = 1e-12;

namespace detail {

inline double horner(std::span<const double> c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace detail

// [L/M] approximant matching c through order L+M.
//
// The denominator solves the M x M Toeplitz system
//
//   sum_{k=1}^{M} q_k c_{L+i-k} = -c_{L+i},   i = 1..M   (c_n = 0 for n < 0),
//
// and the numerator is the truncated convolution p_i = sum_{k<=min(i,M)} q_k c_{i-k}.
// The fit is done in a rescaled variable t = s*tau with s set from the growth
// rate of the coefficients; the approximant is invariant under this change of
// variable but the linear system is far better conditioned.
inline pade_approximant pade_fit(std::span<const double> c, std::size_t L, std::size_t M) {
  const std::size_t n = L + M;
  if (c.size() < n + 1) throw insufficient_coefficients(n + 1, c.size());

  // Growth rate between the first and last nonzero coefficient.
  double s = 1.0;
  std::size_t first = 0, last = 0;
  bool found = false;
  for (std::size_t j = 0; j <= n; ++j)
    if (c[j] != 0.0) {
      if (!found) first = j;
      last = j;
      found = true;
    }
  if (found && last > first) {
    s = std::pow(std::abs(c[first] / c[last]), 1.0 / static_cast<double>(last - first));
    if (!std::isfinite(s) || s <= 0.0) s = 1.0;
  }

  std::vector<double> cs(n + 1);
  double sp = 1.0;
  for (std::size_t j = 0; j <= n; ++j, sp *= s) cs[j] = c[j] * sp;
  auto coef = [&](std::ptrdiff_t k) { return k < 0 ? 0.0 : cs[static_cast<std::size_t>(k)]; };

  std::vector<double> q(M + 1, 0.0);
  q[0] = 1.0;
  if (M > 0) {
    Eigen::MatrixXd A(M, M);
    Eigen::VectorXd rhs(M);
    for (std::size_t i = 1; i <= M; ++i) {
      for (std::size_t k = 1; k <= M; ++k)
        A(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(k - 1)) =
            coef(static_cast<std::ptrdiff_t>(L + i) - static_cast<std::ptrdiff_t>(k));
      rhs(static_cast<Eigen::Index>(i - 1)) = -cs[L + i];
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rc = lu.rcond();
    if (!(rc > pade_rcond_floor))
      throw degenerate_system("Pade [" + std::to_string(L) + "/" + std::to_string(M) + "] denominator system is singular" +
                              (std::isfinite(rc) ? " (rcond " + std::to_string(rc) + ")" : std::string{}));
    const Eigen::VectorXd sol = lu.solve(rhs);
    for (std::size_t k = 1; k <= M; ++k) q[k] = sol(static_cast<Eigen::Index>(k - 1));
  }

  std::vector<double> p(L + 1, 0.0);
  for (std::size_t i = 0; i <= L; ++i)
    for (std::size_t k = 0; k <= std::min(i, M); ++k) p[i] += q[k] * cs[i - k];

  // Undo the rescaling: coefficient j picks up s^{-j}.
  double inv = 1.0;
  for (std::size_t j = 0; j <= L; ++j, inv /= s) p[j] *= inv;
  inv = 1.0;
  for (std::size_t j = 0; j <= M; ++j, inv /= s) q[j] *= inv;

  return {std::move(p), std::move(q)};
}

inline double pade_eval(const pade_approximant& P, double t) {
  const double d = detail::horner(P.den, t);
  if (std::abs(d) <= 1e-300) throw pole_at_evaluation(t);
  return detail::horner(P.num, t) / d;
}

// Roots of the denominator as eigenvalues of its companion matrix, ordered by
// modulus and then by argument.
inline std::vector<std::complex<double>> pade_poles(const pade_approximant& P) {
  std::vector<double> d = P.den;
  while (d.size() > 1 && d.back() == 0.0) d.pop_back();
  const std::size_t m = d.size() - 1;
  if (m == 0) return {};

  const auto mi = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(mi, mi);
  for (Eigen::Index i = 1; i < mi; ++i) C(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < mi; ++i) C(i, mi - 1) = -d[static_cast<std::size_t>(i)] / d[m];

  const Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(m);
  for (Eigen::Index i = 0; i < mi; ++i) roots.push_back(es.eigenvalues()(i));
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

// Taylor coefficients of num/den through the given order by series division.
inline std::vector<double> pade_expand(const pade_approximant& P, std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t j = 0; j <= order; ++j) {
    double acc = j < P.num.size() ? P.num[j] : 0.0;
    for (std::size_t k = 1; k <= std::min(j, P.den.size() - 1); ++k) acc -= P.den[k] * out[j - k];
    out[j] = acc / P.den[0];
  }
  return out;
}

}  // namespace taylorwave
