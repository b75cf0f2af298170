#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <taylorwave/tanh_poly.hpp>

#include "oracles.hpp"

using taylorwave::tanh_poly;

TEST(TanhPoly, NormalizesTrailingZeros) {
  EXPECT_EQ(tanh_poly({1.0, 2.0, 0.0, 0.0}).degree(), 1u);
  EXPECT_EQ(tanh_poly({0.0, 0.0}), tanh_poly{});
  EXPECT_TRUE(tanh_poly{}.is_zero());
  EXPECT_EQ(tanh_poly{}.coeffs().size(), 1u);
  EXPECT_EQ((tanh_poly{0.0, 1.0} - tanh_poly{0.0, 1.0}).degree(), 0u);
}

TEST(TanhPoly, MulExamples) {
  EXPECT_EQ(poly_mul(tanh_poly{0.0, 1.0}, tanh_poly{0.0, 1.0}), (tanh_poly{0.0, 0.0, 1.0}));
  EXPECT_EQ(poly_mul(tanh_poly{1.0, 0.5}, tanh_poly{2.0, -1.0}), (tanh_poly{2.0, 0.0, -0.5}));

  const tanh_poly p{1.0, 0.5}, q{2.0, -1.0};
  EXPECT_NEAR(poly_eval(poly_mul(p, q), 0.7), poly_eval(p, 0.7) * poly_eval(q, 0.7), 1e-15);
  EXPECT_TRUE(poly_mul(p, tanh_poly{}).is_zero());
}

TEST(TanhPoly, DxExamples) {
  EXPECT_EQ(poly_dx(tanh_poly{0.0, 1.0}), (tanh_poly{1.0, 0.0, -1.0}));
  EXPECT_EQ(poly_dx(tanh_poly{3.25}), tanh_poly{});
  EXPECT_EQ(poly_dx(tanh_poly{0.0, 0.0, 1.0}), (tanh_poly{0.0, 2.0, 0.0, -2.0}));
  EXPECT_EQ(tanh_poly({1.0, 2.0, 3.0}).dx().degree(), 3u);
}

TEST(TanhPoly, EvalExamples) {
  EXPECT_EQ(poly_eval(tanh_poly{1.0, 0.5}, 0.0), 1.0);
  EXPECT_EQ(poly_eval(tanh_poly{2.0, -1.0}, 0.0), 2.0);
  EXPECT_NEAR(poly_eval(tanh_poly{0.0, 1.0}, 20.0), 1.0, 1e-15);
}

TEST(TanhPoly, RingAxiomsOnIntegerPolynomials) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_int_poly(rng);
    const auto q = oracle::random_int_poly(rng);
    const auto r = oracle::random_int_poly(rng);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + tanh_poly{}, p);
    EXPECT_EQ(p * tanh_poly{1.0}, p);
  }
}

TEST(TanhPoly, LeibnizRule) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_int_poly(rng);
    const auto q = oracle::random_int_poly(rng);
    EXPECT_EQ((p * q).dx(), p.dx() * q + p * q.dx());
  }
}

TEST(TanhPoly, EvaluationIsARingHomomorphism) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_real_poly(rng);
    const auto q = oracle::random_real_poly(rng);
    const double x = xs(rng);
    EXPECT_NEAR((p + q).eval(x), p.eval(x) + q.eval(x), 1e-13);
    EXPECT_NEAR((p * q).eval(x), p.eval(x) * q.eval(x), 1e-12);
  }
}

TEST(TanhPoly, DxMatchesFiniteDifference) {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_real_poly(rng, 6);
    const double x = xs(rng);
    const double fd = oracle::central_difference([&](double s) { return p.eval(s); }, x, 1e-5);
    EXPECT_NEAR(p.dx().eval(x), fd, 1e-6);
  }
}

TEST(TanhPoly, EvaluationBoundedByCoefficientSum) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xs(-50.0, 50.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = oracle::random_real_poly(rng, 8);
    double bound = 0.0;
    for (double c : p.coeffs()) bound += std::abs(c);
    EXPECT_LE(std::abs(p.eval(xs(rng))), bound * (1.0 + 1e-15));
  }
}
