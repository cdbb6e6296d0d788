#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superform/group_action.hpp"
#include "superform/invariants.hpp"
#include "superform/reduction.hpp"

using namespace superform;
using oracle::q;

namespace {

Matrix<Exact> label_matrix(Tag t) { return canonical_matrix(CanonicalLabel::of(t)); }

// Pointwise oracle: det(B J B^T - x I) by the Leibniz formula at x = 0..k+1.
void expect_p_matches_oracle(const Matrix<Exact>& b) {
  const std::size_t k = b.rows();
  Matrix<Exact> m = b * symplectic_unit<Exact>(b.cols() / 2) * b.transpose();
  Polynomial p = p_poly(b);
  for (long x = 0; x <= static_cast<long>(k) + 1; ++x) {
    Matrix<Exact> shifted = m - Matrix<Exact>::identity(k) * q(x);
    EXPECT_EQ(p.evaluate(q(x)), oracle::leibniz_det(shifted));
  }
}

void expect_q_matches_oracle(const Matrix<Exact>& b) {
  const std::size_t n = b.cols();
  Matrix<Exact> m = b.transpose() * b;
  Polynomial qp = q_poly(b);
  for (long x = 0; x <= static_cast<long>(n) + 1; ++x) {
    Matrix<Exact> shifted = m - symplectic_unit<Exact>(n / 2) * q(x);
    EXPECT_EQ(qp.evaluate(q(x)), oracle::leibniz_det(shifted));
  }
}

}  // namespace

TEST(Invariants, PolynomialsOfRepresentatives) {
  const Polynomial l = Polynomial::lambda();
  EXPECT_EQ(p_poly(label_matrix(Tag::B1)), -l);
  EXPECT_EQ(q_poly(label_matrix(Tag::B1)), l * l);
  for (const Exact& a : {q(2), q(1, 1), q(0, 1)}) {
    Matrix<Exact> b = canonical_matrix(CanonicalLabel::b2(a));
    EXPECT_EQ(p_poly(b), l * l + Polynomial(a * a));
    EXPECT_EQ(p_poly(b).evaluate(q(0)), a * a);
    EXPECT_EQ(q_poly(b), l * l + Polynomial(a * a));
  }
  EXPECT_EQ(p_poly(label_matrix(Tag::B3)), l * l);
  EXPECT_EQ(q_poly(Matrix<Exact>(1, 2)), l * l);
  EXPECT_EQ(p_poly(Matrix<Exact>(3, 2)), -(l * l * l));
}

TEST(Invariants, PolynomialsAgreeWithLeibnizOracle) {
  Rng rng(8);
  for (const auto& d : oracle::shapes()) {
    for (int t = 0; t < 3; ++t) {
      Matrix<Exact> b = random_matrix(d.k, d.two_ell, rng);
      expect_p_matches_oracle(b);
      expect_q_matches_oracle(b);
    }
  }
}

TEST(Invariants, RelationSignIsPlusOne) {
  RelationReport b1 = relation_check(label_matrix(Tag::B1));
  EXPECT_TRUE(b1.holds);
  EXPECT_EQ(b1.sign, 1);
  EXPECT_EQ(b1.alternative_sign, -1);
  EXPECT_FALSE(b1.alternative_holds);

  RelationReport b2 = relation_check(canonical_matrix(CanonicalLabel::b2(q(2))));
  EXPECT_EQ(b2.sign, 1);
  EXPECT_TRUE(b2.alternative_holds);

  Rng rng(9);
  for (const auto& d : oracle::shapes()) {
    for (int t = 0; t < 50; ++t) {
      RelationReport r = relation_check(random_matrix(d.k, d.two_ell, rng));
      EXPECT_TRUE(r.holds);
      EXPECT_EQ(r.sign, 1);
    }
  }
}

TEST(Invariants, PairSumFormula) {
  EXPECT_EQ(p_coeff_formula(label_matrix(Tag::B4)).value, q(0));
  for (const Exact& a : {q(2), q(1, 1), q(0, 1), q(3, -2)}) {
    Matrix<Exact> orbit{{q(1), q(0)}, {q(0), a}, {q(0), q(0)}};
    EXPECT_EQ(p_coeff_formula(orbit).value, a * a);
    EXPECT_EQ(p_coeff_formula(Matrix<Exact>{{q(1), q(0)}, {q(0), a}}).value, a * a);
  }
  EXPECT_THROW(p_coeff_formula(label_matrix(Tag::B1)), InputError);

  // The sign relating the sum to the coefficient depends on k only.
  Rng rng(10);
  for (const auto& d : oracle::shapes()) {
    if (d.k < 2) continue;
    for (int t = 0; t < 20; ++t) {
      CoefficientFormula f = p_coeff_formula(random_matrix(d.k, d.two_ell, rng));
      EXPECT_EQ(f.value, f.minor_value);
      if (!f.value.is_zero()) {
        EXPECT_EQ(f.sign, d.k % 2 ? -1 : 1) << d.k;
      }
    }
  }
}

TEST(Invariants, IsotropyAndSignature) {
  EXPECT_TRUE(isotropy_check(label_matrix(Tag::B3)));
  EXPECT_TRUE(isotropy_check(label_matrix(Tag::B6)));
  EXPECT_FALSE(isotropy_check(canonical_matrix(CanonicalLabel::b2(q(2)))));

  InvariantSignature b5 = signature(label_matrix(Tag::B5));
  EXPECT_EQ(b5.rank_b, 3u);
  EXPECT_FALSE(b5.isotropic_columns);
  EXPECT_EQ(p_coeff_formula(label_matrix(Tag::B5)).coefficient, q(0));
  InvariantSignature b6 = signature(label_matrix(Tag::B6));
  EXPECT_EQ(b6.rank_b, 2u);
  EXPECT_TRUE(b6.isotropic_columns);
  InvariantSignature zero = signature(Matrix<Exact>(3, 2));
  EXPECT_EQ(zero.rank_b, 0u);
}

TEST(Invariants, InvariantUnderTheJointAction) {
  Rng rng(12);
  for (const auto& d : oracle::shapes()) {
    for (int t = 0; t < 20; ++t) {
      Matrix<Exact> b = random_matrix(d.k, d.two_ell, rng);
      auto tr = random_transform(d, rng);
      Matrix<Exact> c = act(b, tr);
      EXPECT_EQ(signature(b), signature(c));
      if (d.k == d.two_ell) {
        Matrix<Exact> by = b * tr.y;
        EXPECT_EQ(determinant(by.transpose() * by), determinant(b.transpose() * b));
      }
    }
  }
}
