#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superform/bases.hpp"
#include "superform/group_action.hpp"
#include "superform/polynomial.hpp"

using namespace superform;
using oracle::frac;
using oracle::q;

TEST(Matrix, BareissAgreesWithLeibniz) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 5; ++t) {
      Matrix<Exact> a = random_matrix(n, n, rng);
      EXPECT_EQ(determinant(a), oracle::leibniz_det(a)) << n;
    }
  }
  Matrix<Exact> singular{{q(1), q(2)}, {q(2), q(4)}};
  EXPECT_EQ(determinant(singular), q(0));
}

TEST(Matrix, KernelAndInverse) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix<Exact> a = random_matrix(3, 5, rng);
    auto ker = kernel_basis(a);
    EXPECT_EQ(ker.size() + rank(a), 5u);
    for (const auto& v : ker) EXPECT_TRUE((a * v).is_zero());
    Matrix<Exact> sq = random_matrix(4, 4, rng);
    if (auto inv = inverse(sq)) {
      EXPECT_EQ(*inv * sq, Matrix<Exact>::identity(4));
    } else {
      EXPECT_EQ(determinant(sq), q(0));
    }
  }
}

TEST(Polynomial, ArithmeticAndReflection) {
  Polynomial l = Polynomial::lambda();
  Polynomial p = (l - Polynomial(q(1))) * (l + Polynomial(q(0, 1)));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(q(1)), q(0));
  EXPECT_EQ(p.evaluate(q(0, -1)), q(0));
  EXPECT_EQ(p / (l - Polynomial(q(1))), l + Polynomial(q(0, 1)));
  EXPECT_EQ(p.reflect().evaluate(q(-1)), q(0));
  EXPECT_EQ(to_string(Polynomial::from_descending({q(1), q(0), q(-2)})), "lambda^2 - 2");
  EXPECT_THROW(p / (l - Polynomial(q(2))), std::domain_error);
}

TEST(Bases, RepresentValueStaysExact) {
  // 2x^2 + 3y^2 = 1 has no solution over Q but has (i, 1) over Q(i).
  Matrix<Exact> g{{q(2), q(0)}, {q(0), q(3)}};
  auto v = represent_value(g, q(1));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(pairing(*v, g, *v), q(1));

  Matrix<Exact> hyperbolic{{q(0), q(1)}, {q(1), q(0)}};
  auto h = represent_value(hyperbolic, q(1));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(pairing(*h, hyperbolic, *h), q(1));
  EXPECT_FALSE(anisotropic_vector(Matrix<Exact>(2, 2)).has_value());
}

TEST(Bases, OrthonormalAndSymplecticBases) {
  Matrix<Exact> g{{q(0), q(1), q(0)}, {q(1), q(0), q(0)}, {q(0), q(0), q(4)}};
  Matrix<Exact> p = orthonormal_basis<Exact>(g, unit_vectors<Exact>(3, 0, 3));
  EXPECT_EQ(p.transpose() * g * p, Matrix<Exact>::identity(3));

  Matrix<Exact> omega{{q(0), q(0), q(3), q(0)},
                      {q(0), q(0), q(0), q(1)},
                      {q(-3), q(0), q(0), q(0)},
                      {q(0), q(-1), q(0), q(0)}};
  Matrix<Exact> s = symplectic_basis<Exact>(omega, unit_vectors<Exact>(4, 0, 4));
  EXPECT_EQ(s.transpose() * omega * s, symplectic_unit<Exact>(2));
}
