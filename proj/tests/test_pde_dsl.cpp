#include <gtest/gtest.h>

#include <random>
#include <string>

#include <taylorwave/errors.hpp>
#include <taylorwave/fixtures.hpp>
#include <taylorwave/pde_dsl.hpp>

#include "oracles.hpp"

using namespace taylorwave;
namespace A = taylorwave::ast;
using spatial_series = time_series<tanh_poly>;

namespace {

::testing::AssertionResult same_ast(const A::ptr& a, const A::ptr& b, const std::vector<std::string>& f) {
  if (A::equal(a, b)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_string(a, f) << "  !=  " << to_string(b, f);
}

// Random well-formed expressions over the given number of fields.
A::ptr random_ast(std::mt19937& rng, std::size_t nfields, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  std::uniform_int_distribution<std::size_t> fld(0, nfields - 1);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::uniform_int_distribution<unsigned> ord(1, 3), ex(1, 3);
  switch (pick(rng)) {
    case 0: return A::make_const(rational(num(rng), den(rng)));
    case 1: return A::make_field(fld(rng));
    case 2: return A::make_deriv(fld(rng), ord(rng));
    case 3: return A::make_neg(random_ast(rng, nfields, depth - 1));
    case 4: return A::make_add(random_ast(rng, nfields, depth - 1), random_ast(rng, nfields, depth - 1));
    case 5: return A::make_sub(random_ast(rng, nfields, depth - 1), random_ast(rng, nfields, depth - 1));
    case 6: return A::make_mul(random_ast(rng, nfields, depth - 1), random_ast(rng, nfields, depth - 1));
    default: return A::make_pow(random_ast(rng, nfields, depth - 1), ex(rng));
  }
}

std::vector<spatial_series> random_state(std::mt19937& rng, std::size_t nfields, std::size_t order) {
  std::vector<spatial_series> s;
  for (std::size_t i = 0; i < nfields; ++i) {
    std::vector<tanh_poly> c(order + 1);
    for (auto& p : c) p = oracle::random_int_poly(rng, 2, 3);
    s.emplace_back(std::move(c));
  }
  return s;
}

}  // namespace

TEST(Parser, GrammarExamples) {
  const auto s1 = parse_system("u' = -5.5 * u_x");
  ASSERT_EQ(s1.fields, std::vector<std::string>{"u"});
  EXPECT_TRUE(same_ast(s1.rhs[0], A::make_mul(A::make_const(rational(-11, 2)), A::make_deriv(0, 1)), s1.fields));

  const auto s2 = parse_system("u' = -11/4 + 11*(u - 1)^2");
  const auto expected = A::make_add(
      A::make_const(rational(-11, 4)),
      A::make_mul(A::make_const(11), A::make_pow(A::make_sub(A::make_field(0), A::make_const(1)), 2)));
  EXPECT_TRUE(same_ast(s2.rhs[0], expected, s2.fields));
}

TEST(Parser, UnknownFieldIsReported) {
  try {
    parse_system("u' = w_x");
    FAIL() << "expected unknown_field";
  } catch (const unknown_field& e) {
    EXPECT_EQ(e.name(), "w");
  }
  EXPECT_THROW(parse_system("u' = d_x(q)"), unknown_field);
}

TEST(Parser, Precedence) {
  const auto s = parse_system("a' = a + b * c\nb' = -b^2\nc' = -2^2\n");
  EXPECT_TRUE(same_ast(s.rhs[0], A::make_add(A::make_field(0), A::make_mul(A::make_field(1), A::make_field(2))), s.fields));
  EXPECT_TRUE(same_ast(s.rhs[1], A::make_neg(A::make_pow(A::make_field(1), 2)), s.fields));
  EXPECT_TRUE(same_ast(s.rhs[2], A::make_neg(A::make_pow(A::make_const(2), 2)), s.fields));

  const auto t = parse_system("u' = u - u - u\nv' = -u * v\n");
  EXPECT_TRUE(same_ast(t.rhs[0], A::make_sub(A::make_sub(A::make_field(0), A::make_field(0)), A::make_field(0)), t.fields));
  EXPECT_TRUE(same_ast(t.rhs[1], A::make_mul(A::make_neg(A::make_field(0)), A::make_field(1)), t.fields));
}

TEST(Parser, DerivativeSpellings) {
  const auto s = parse_system("u' = u_xxx + d_x^3(u) + d_x(u) + u_x");
  const auto d3 = A::make_deriv(0, 3), d1 = A::make_deriv(0, 1);
  EXPECT_TRUE(same_ast(s.rhs[0], A::make_add(A::make_add(A::make_add(d3, d3), d1), d1), s.fields));
  EXPECT_EQ(s.max_spatial_order(), 3u);
}

TEST(Parser, RejectsUnsupportedDerivatives) {
  EXPECT_THROW(parse_system("u' = d_x(u^2)"), unsupported_derivative);
  EXPECT_THROW(parse_system("u' = d_x(2)"), unsupported_derivative);
  EXPECT_THROW(parse_system("u' = u_t"), unsupported_derivative);
  EXPECT_THROW(parse_system("u' = u_xt"), unsupported_derivative);
  EXPECT_THROW(parse_system("u' = d_t(u)"), unsupported_derivative);
}

TEST(Parser, RejectsMalformedInput) {
  EXPECT_THROW(parse_system("u' = sin(u)"), syntax_error);
  EXPECT_THROW(parse_system("u' = u^0"), syntax_error);
  EXPECT_THROW(parse_system("u' = u^1.5"), syntax_error);
  EXPECT_THROW(parse_system("u' = u / 2"), syntax_error);
  EXPECT_THROW(parse_system("u' = (u + 1"), syntax_error);
  EXPECT_THROW(parse_system("u = u"), syntax_error);
  EXPECT_THROW(parse_system("u' = "), syntax_error);
  EXPECT_THROW(parse_system("# only a comment\n"), input_error);
  EXPECT_THROW(parse_system("u' = u\nu' = 2*u\n"), duplicate_equation);
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  try {
    parse_system("u' = u\nv' = u + * v\n");
    FAIL() << "expected syntax_error";
  } catch (const syntax_error& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
}

TEST(Parser, FileFormatCommentsAndFieldOrder) {
  const auto s = parse_system(
      "# coupled example\n"
      "\n"
      "z' = u * v   # uses fields declared later\n"
      "u' = 1\n"
      "v' = -z\n");
  EXPECT_EQ(s.fields, (std::vector<std::string>{"z", "u", "v"}));
  EXPECT_TRUE(same_ast(s.rhs[0], A::make_mul(A::make_field(1), A::make_field(2)), s.fields));
}

TEST(Parser, RationalLiteralsStayExact) {
  const auto s = parse_system("u' = 0.125 + 6/8 - 2.50");
  EXPECT_TRUE(same_ast(s.rhs[0],
                       A::make_sub(A::make_add(A::make_const(rational(1, 8)), A::make_const(rational(3, 4))),
                                   A::make_const(rational(5, 2))),
                       s.fields));
}

TEST(Parser, PrintParseIsAFixedPoint) {
  std::mt19937 rng(8080);
  const std::vector<std::string> fields{"u", "v", "z"};
  for (int trial = 0; trial < 500; ++trial) {
    pde_system sys;
    sys.fields = fields;
    for (std::size_t i = 0; i < fields.size(); ++i) sys.rhs.push_back(random_ast(rng, fields.size(), 4));
    const auto text = to_string(sys);
    const auto back = parse_system(text);
    ASSERT_TRUE(back == sys) << text;
  }
  for (auto name : {"riccati", "coupled", "transport"}) {
    const auto f = builtin_fixture(name);
    EXPECT_TRUE(parse_system(to_string(f.system)) == f.system) << name;
  }
}

TEST(EvalRhs, Examples) {
  const auto ux = parse_system("u' = u_x");
  const auto r1 = eval_rhs(ux, {spatial_series{tanh_poly{0.0, 1.0}}}, 0);
  EXPECT_EQ(r1[0], (spatial_series{tanh_poly{1.0, 0.0, -1.0}}));

  const auto sq = parse_system("u' = u^2");
  const spatial_series u{tanh_poly{0.0, 1.0}, tanh_poly{1.0}, tanh_poly{}};
  const auto r2 = eval_rhs(sq, {u}, 2);
  EXPECT_EQ(r2[0], (spatial_series{tanh_poly{0.0, 0.0, 1.0}, tanh_poly{0.0, 2.0}, tanh_poly{1.0}}));

  const auto c3 = parse_system("u' = 3");
  const auto r3 = eval_rhs(c3, {u}, 1);
  EXPECT_EQ(r3[0], (spatial_series{tanh_poly{3.0}, tanh_poly{}}));
}

TEST(EvalRhs, Errors) {
  const auto sq = parse_system("u' = u^2");
  EXPECT_THROW(eval_rhs(sq, {spatial_series{tanh_poly{1.0}}}, 1), truncation_too_deep);
  EXPECT_THROW(eval_rhs(sq, {}, 0), dimension_mismatch);
}

TEST(EvalRhs, LinearInAddSubNeg) {
  std::mt19937 rng(606);
  const std::vector<std::string> fields{"u", "v"};
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_ast(rng, 2, 3);
    const auto b = random_ast(rng, 2, 3);
    const auto state = random_state(rng, 2, 3);
    auto eval1 = [&](const A::ptr& e) {
      pde_system s{fields, {e, A::make_const(0)}};
      return eval_rhs(s, state, 3)[0];
    };
    EXPECT_EQ(eval1(A::make_add(a, b)), eval1(a) + eval1(b));
    EXPECT_EQ(eval1(A::make_sub(a, b)), eval1(a) - eval1(b));
    EXPECT_EQ(eval1(A::make_neg(a)), -eval1(a));
  }
}

TEST(EvalRhs, DerivativeCommutesWithTruncation) {
  std::mt19937 rng(9);
  const auto sys = parse_system("u' = u_xx\nv' = d_x^3(v)\n");
  for (int trial = 0; trial < 50; ++trial) {
    const auto state = random_state(rng, 2, 5);
    const auto full = eval_rhs(sys, state, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      std::vector<spatial_series> cut;
      for (const auto& s : state) cut.push_back(s.truncated(n));
      const auto part = eval_rhs(sys, cut, n);
      for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(part[i], full[i].truncated(n));
    }
  }
}
