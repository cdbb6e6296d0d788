#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superform/fock.hpp"

using namespace superform;
using oracle::frac;
using oracle::q;

namespace {

AlgebraPtr algebra(bool inhomogeneous) {
  return std::make_shared<const SuperAlgebra>(oscillator_algebra(
      inhomogeneous ? inhomogeneous_example_form() : homogeneous_example_form()));
}

Exact entry(const FockOperator& op, const FockSpace& s, std::size_t n1, unsigned e1, unsigned f1,
            std::size_t n0, unsigned e0, unsigned f0) {
  return op.matrix(s.index(n1, e1, f1), s.index(n0, e0, f0));
}

}  // namespace

TEST(Fock, GeneratorActions) {
  FockSpace s{FockVariant::Inhomogeneous, 5};
  EXPECT_EQ(s.dim(), 24u);
  FockOperator a = rho("a", s);
  EXPECT_EQ(entry(a, s, 3, 1, 0, 3, 0, 0), q(1));
  EXPECT_EQ(entry(a, s, 3, 0, 0, 3, 1, 0), frac(1, 2));

  FockOperator b1 = rho("b1", s);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(entry(b1, s, n - 1, 0, 0, n, 0, 0), q(static_cast<long>(n)));
    EXPECT_EQ(entry(b1, s, n - 1, 1, 0, n, 1, 0), q(static_cast<long>(n)));
    EXPECT_EQ(entry(b1, s, n, 0, 1, n, 1, 0), q(1));
  }
  FockOperator kappa = rho("kappa", s);
  EXPECT_EQ(entry(kappa, s, 0, 1, 1, 0, 1, 0), q(-1));
  EXPECT_EQ(entry(kappa, s, 0, 0, 1, 0, 0, 0), q(1));
  EXPECT_EQ(rho("K", s).matrix, Matrix<Exact>::identity(s.dim()));
  EXPECT_TRUE(rho("b2", s).matrix.col(s.index(5, 0, 0)).is_zero());  // truncated

  FockSpace h{FockVariant::Homogeneous, 5};
  EXPECT_EQ(h.dim(), 12u);
  EXPECT_TRUE(rho("kappa", h).matrix.is_zero());
  EXPECT_EQ(h.basis_name(h.index(3, 1, 0)), "x^3 xi");

  EXPECT_THROW(rho("c", s), InputError);
  EXPECT_THROW(rho("a", FockSpace{FockVariant::Homogeneous, 0}), InputError);
}

TEST(Fock, OperatorsRespectParity) {
  for (FockVariant v : {FockVariant::Homogeneous, FockVariant::Inhomogeneous}) {
    FockSpace s{v, 4};
    for (const char* g : {"b1", "b2", "a", "K", "kappa"}) EXPECT_TRUE(respects_parity(rho(g, s), s)) << g;
    // xi and kappa multiplication anticommute.
    Matrix<Exact> xi = rho("a", s).matrix, k = rho("kappa", s).matrix;
    EXPECT_TRUE((xi * k + k * xi).is_zero());
  }
}

TEST(Fock, RepresentationChecks) {
  for (std::size_t n : {4u, 6u, 8u}) {
    EXPECT_TRUE(representation_check(*algebra(false), FockVariant::Homogeneous, n).ok()) << n;
    EXPECT_TRUE(representation_check(*algebra(true), FockVariant::Inhomogeneous, n).ok()) << n;
  }
  // The inhomogeneous operators do not represent the homogeneous algebra.
  FockReport wrong = representation_check(*algebra(false), FockVariant::Inhomogeneous, 4);
  EXPECT_FALSE(wrong.ok());
  EXPECT_THROW(representation_check(*algebra(true), FockVariant::Inhomogeneous, 1), InputError);
}

TEST(Fock, CanonicalCommutators) {
  FockSpace s{FockVariant::Inhomogeneous, 6};
  Matrix<Exact> b1 = rho("b1", s).matrix, b2 = rho("b2", s).matrix, a = rho("a", s).matrix;
  Matrix<Exact> comm = b1 * b2 - b2 * b1;
  Matrix<Exact> anti = a * a + a * a;
  Matrix<Exact> mixed = b1 * a - a * b1;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (s.degree_of(j) > 4) continue;
    EXPECT_EQ(comm.col(j), Matrix<Exact>::identity(s.dim()).col(j));
    EXPECT_EQ(anti.col(j), Matrix<Exact>::identity(s.dim()).col(j));
    EXPECT_EQ(mixed.col(j), rho("kappa", s).matrix.col(j));
  }
  EXPECT_TRUE(b1.col(s.index(0, 0, 0)).is_zero());
}

TEST(Fock, OspActionChecks) {
  for (std::size_t n : {4u, 6u, 8u}) {
    EXPECT_TRUE(osp_action_check(osp_generators(algebra(false)), FockVariant::Homogeneous, n).ok());
    EXPECT_TRUE(osp_action_check(osp_generators(algebra(true)), FockVariant::Inhomogeneous, n).ok());
  }
  EXPECT_THROW(osp_action_check(osp_generators(algebra(true)), FockVariant::Inhomogeneous, 3), InputError);
}

TEST(Fock, QuadraticOperators) {
  OspGenerators g = osp_generators(algebra(false));
  FockSpace s{FockVariant::Homogeneous, 8};
  Matrix<Exact> h = rho(g[0], s);
  for (std::size_t n = 0; n <= 6; ++n) {
    Matrix<Exact> col = h.col(s.index(n, 0, 0));
    Matrix<Exact> expected(s.dim(), 1);
    expected(s.index(n, 0, 0), 0) = frac(static_cast<long>(2 * n + 1), 4);
    EXPECT_EQ(col, expected) << n;
  }
  Matrix<Exact> ep = rho(g[1], s), em = rho(g[2], s);
  Matrix<Exact> lhs = ep * em - em * ep;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (s.degree_of(j) <= 4) EXPECT_EQ(lhs.col(j), (q(2) * h).col(j));
  }

  OspGenerators gi = osp_generators(algebra(true));
  FockSpace si{FockVariant::Inhomogeneous, 8};
  Matrix<Exact> fm = rho(gi[4], si), emi = rho(gi[2], si), kappa = rho("kappa", si).matrix;
  Matrix<Exact> anti = fm * fm + fm * fm;
  Matrix<Exact> rhs = frac(-1, 2) * emi - kappa * fm;
  for (std::size_t j = 0; j < si.dim(); ++j) {
    if (si.degree_of(j) <= 4) EXPECT_EQ(anti.col(j), rhs.col(j));
  }
}

TEST(Fock, TruncationIsMonotone) {
  FockSpace small{FockVariant::Inhomogeneous, 4}, big{FockVariant::Inhomogeneous, 6};
  for (const char* g : {"b1", "b2", "a", "kappa"}) {
    Matrix<Exact> a = rho(g, small).matrix, b = rho(g, big).matrix;
    for (std::size_t j = 0; j < small.dim(); ++j) {
      if (small.degree_of(j) >= 4) continue;
      for (std::size_t i = 0; i < small.dim(); ++i) EXPECT_EQ(a(i, j), b(i, j));
    }
  }
}
