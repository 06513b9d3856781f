#include <gtest/gtest.h>

#include "g2spin/exact_eigenvalue.hpp"
#include "g2spin/exact_matrix.hpp"
#include "g2spin/scalar.hpp"
#include "oracles.hpp"

using namespace g2spin;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(parse_rational("33/4")), "33/4");
  EXPECT_EQ(to_string(Rational(12)), "12");
  for (const char* bad : {"0.5", "1/0", "", "1e3", "a/b", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, SquareRoots) {
  Rational root;
  EXPECT_TRUE(rational_sqrt(Rational(9, 4), &root));
  EXPECT_EQ(root, Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), &root));
  EXPECT_FALSE(rational_sqrt(Rational(-4), &root));
  EXPECT_EQ(square_free_part(12), 3);
  EXPECT_EQ(square_free_part(10), 10);
  EXPECT_EQ(square_free_part(9), 1);
}

TEST(Quadratic, FieldArithmetic) {
  const Quadratic r2 = Quadratic::sqrt_of(2);
  EXPECT_EQ(r2 * r2, Quadratic(2L));
  EXPECT_EQ(Quadratic::sqrt_of(8), Quadratic(0, 2, 2));
  EXPECT_EQ(Quadratic::sqrt_of(9), Quadratic(3L));
  const Quadratic x(1, 1, 2);  // 1 + sqrt 2
  EXPECT_EQ(x * x.conjugate(), Quadratic(-1L));
  EXPECT_EQ(x / x, Quadratic(1L));
  EXPECT_EQ(x.norm(), Rational(-1));
  EXPECT_EQ(Quadratic(Rational(3, 2), 0, 0) + x, Quadratic(Rational(5, 2), 1, 2));
  EXPECT_EQ(Quadratic(0, 1, 2).sign(), 1);
  EXPECT_EQ(Quadratic(Rational(3, 2), -1, 2).sign(), 1);
  EXPECT_EQ(Quadratic(Rational(7, 5), -1, 2).sign(), -1);
  EXPECT_THROW(Quadratic::sqrt_of(2) + Quadratic::sqrt_of(3), FieldMismatch);
  EXPECT_THROW(Quadratic(1L) / Quadratic(0L), std::domain_error);
}

TEST(Quadratic, FusedOperations) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quadratic a(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 20, 7), 5);
    const Quadratic b(oracle::random_rational(rng, 20, 7), oracle::random_rational(rng, 20, 7), 5);
    const Rational r = oracle::random_rational(rng, 20, 7);
    Quadratic acc(3L);
    acc.sub_mul(a, b);
    EXPECT_EQ(acc, Quadratic(3L) - a * b);
    Quadratic acc2(a);
    acc2.add_mul(b, r);
    EXPECT_EQ(acc2, a + b * Quadratic(r));
  }
}

TEST(ExactEigenvalue, CanonicalForm) {
  const ExactEigenvalue four_root = ExactEigenvalue::sqrt(16);
  EXPECT_TRUE(four_root.is_rational());
  EXPECT_EQ(four_root, ExactEigenvalue(4));
  const ExactEigenvalue x(Rational(-1, 2), 1, 17);
  EXPECT_EQ(x.to_string(), "-1/2+sqrt(17)");
  EXPECT_EQ(ExactEigenvalue(Rational(3), 0, 0).s(), 0);
  EXPECT_EQ((-x).s(), -1);
}

TEST(ExactEigenvalue, SquaredMatchesFormula) {
  // (p + s sqrt q)^2 = p^2 + q + sign(2ps) sqrt(4 p^2 q)
  const ExactEigenvalue x(Rational(-1, 2), 1, 17);
  EXPECT_EQ(x.squared(), ExactEigenvalue(Rational(69, 4), -1, 17));
  EXPECT_EQ(ExactEigenvalue::sqrt(24).squared(), ExactEigenvalue(24));
  EXPECT_EQ(ExactEigenvalue(Rational(7, 2)).squared(), ExactEigenvalue(Rational(49, 4)));
}

TEST(ExactEigenvalue, Reciprocal) {
  const ExactEigenvalue x(1, 1, 2);
  EXPECT_EQ(x.reciprocal(), ExactEigenvalue(-1, 1, 2));
  EXPECT_THROW(ExactEigenvalue(0).reciprocal(), std::domain_error);
}

TEST(ExactEigenvalue, OrderAgreesWithHighPrecision) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> sign(-1, 1);
  auto draw = [&] {
    const Rational p = oracle::random_rational(rng, 30, 9);
    Rational q = oracle::random_rational(rng, 30, 9);
    q = abs(q);
    const int s = sgn(q) == 0 ? 0 : sign(rng);
    return std::tuple{p, s, q};
  };
  for (int t = 0; t < 1000; ++t) {
    const auto [p1, s1, q1] = draw();
    auto [p2, s2, q2] = draw();
    if (t % 10 == 0) {  // near ties: same radical, nearby rational part
      q2 = q1;
      s2 = s1;
      p2 = p1 + Rational(1, 1000000);
    }
    const ExactEigenvalue a(p1, s1, q1), b(p2, s2, q2);
    const oracle::Real ra = oracle::radical(p1, s1, q1), rb = oracle::radical(p2, s2, q2);
    const int expected = ra < rb ? -1 : (ra > rb ? 1 : 0);
    EXPECT_EQ(compare(a, b), expected) << a.to_string() << " vs " << b.to_string();
    EXPECT_EQ(a.sign(), ra < 0 ? -1 : (ra > 0 ? 1 : 0)) << a.to_string();
  }
}

TEST(ExactEigenvalue, TotalOrderIsTransitive) {
  std::mt19937_64 rng(5);
  std::vector<ExactEigenvalue> xs;
  for (int t = 0; t < 60; ++t) {
    Rational q = abs(oracle::random_rational(rng, 12, 3));
    xs.emplace_back(oracle::random_rational(rng, 12, 3), sgn(q) ? (t % 2 ? 1 : -1) : 0, q);
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    EXPECT_LE(oracle::radical(xs[i].p(), xs[i].s(), xs[i].q()),
              oracle::radical(xs[i + 1].p(), xs[i + 1].s(), xs[i + 1].q()));
  }
}

TEST(SignOf, Boundaries) {
  EXPECT_EQ(sign_of(Rational(-3), Rational(1), Rational(9)), 0);
  EXPECT_EQ(sign_of(Rational(-3), Rational(1), Rational(10)), 1);
  EXPECT_EQ(sign_of(Rational(3), Rational(-1), Rational(10)), -1);
  EXPECT_EQ(sign_of(Rational(0), Rational(0), Rational(5)), 0);
}

TEST(ExactMatrix, KernelOfIdentityIsEmpty) {
  const auto id = Matrix<Rational>::identity(8);
  EXPECT_TRUE(exact_kernel(id).empty());
  EXPECT_EQ(rank(id), 8u);
}

TEST(ExactMatrix, RankPlusNullityRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dims(1, 9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = dims(rng), c = dims(rng);
    Matrix<Rational> m(r, c);
    std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        // sparse entries keep the rank from always being full
        const Rational v = (t % 3 == 0 || (i + j) % 3 == 0) ? oracle::random_rational(rng, 3, 2) : Rational(0);
        m(i, j) = rows[i][j] = v;
      }
    const auto kernel = exact_kernel(m);
    EXPECT_EQ(rank(m), oracle::rank(rows));
    EXPECT_EQ(rank(m) + kernel.size(), c);
    for (const auto& v : kernel) EXPECT_TRUE(is_zero_vector(m * v));
  }
}

TEST(ExactMatrix, QuadraticEigenspace) {
  // [[0, 1], [2, 0]] has eigenvalues +-sqrt 2.
  Matrix<Quadratic> m(2, 2);
  m(0, 1) = Quadratic(1L);
  m(1, 0) = Quadratic(2L);
  const Quadratic r2 = Quadratic::sqrt_of(2);
  const auto plus = exact_kernel(m - Matrix<Quadratic>::identity(2) * r2);
  ASSERT_EQ(plus.size(), 1u);
  const auto image = m * plus[0];
  EXPECT_EQ(image[0], plus[0][0] * r2);
  EXPECT_EQ(image[1], plus[0][1] * r2);
  EXPECT_EQ(rank(m - Matrix<Quadratic>::identity(2) * Quadratic(1L)), 2u);
}
