#include "chpos/errors.hpp"
#include "chpos/linalg.hpp"
#include "chpos/rational.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace chpos;

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
}

TEST(Rational, RoundTripRandom) {
  oracle::Gen g(11);
  for (int t = 0; t < 500; ++t) {
    const Rational q = g.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Rational, InverseFactorialAndSign) {
  EXPECT_EQ(inverse_factorial(0), Rational(1));
  EXPECT_EQ(inverse_factorial(4), Rational(1, 24));
  EXPECT_EQ(sign(Rational(-1, 3)), -1);
  EXPECT_EQ(sign(Rational(0)), 0);
}

TEST(Linalg, InverseTimesMatrixIsIdentity) {
  oracle::Gen g(12);
  for (int t = 0; t < 100; ++t) {
    const int n = g.int_in(1, 5);
    linalg::Matrix a(n, linalg::Vector(n));
    for (auto& row : a)
      for (auto& x : row) x = g.rational(5, 3);
    if (linalg::rank(a) < static_cast<std::size_t>(n)) {
      EXPECT_THROW(linalg::inverse(a), ParameterError);
      continue;
    }
    const auto inv = linalg::inverse(a);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += a[i][k] * inv[k][j];
        EXPECT_EQ(s, Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST(Linalg, SolveAndNullspace) {
  oracle::Gen g(13);
  for (int t = 0; t < 100; ++t) {
    const int rows = g.int_in(1, 4);
    const int cols = g.int_in(1, 5);
    linalg::Matrix a(rows, linalg::Vector(cols));
    for (auto& row : a)
      for (auto& x : row) x = g.rational(3, 2);
    linalg::Vector x(cols);
    for (auto& v : x) v = g.rational(4, 3);
    const auto b = linalg::multiply(a, x);
    const auto sol = linalg::solve(a, b, cols);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(linalg::multiply(a, *sol), b);
    const auto ker = linalg::nullspace(a, cols);
    EXPECT_EQ(ker.size() + linalg::rank(a), static_cast<std::size_t>(cols));
    for (const auto& v : ker) {
      for (const auto& y : linalg::multiply(a, v)) EXPECT_EQ(y, 0);
    }
  }
}

TEST(Linalg, InconsistentSystem) {
  const linalg::Matrix a{{1, 1}, {2, 2}};
  EXPECT_FALSE(linalg::solve(a, {1, 3}, 2).has_value());
}
