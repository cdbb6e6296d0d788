#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superform/group_action.hpp"

using namespace superform;
using oracle::q;

namespace {

Matrix<Exact> sample_b(Rng& rng) { return random_matrix(3, 4, rng); }

}  // namespace

TEST(GroupAction, ActIsXtBY) {
  Rng rng(1);
  Matrix<Exact> b = sample_b(rng);
  TransformPair<Exact> t = random_transform({3, 4}, rng);
  EXPECT_EQ(act(b, t), t.x.transpose() * b * t.y);
  EXPECT_EQ(act(act(b, t), t), act(b, t.then(t)));
  EXPECT_THROW(act(b, TransformPair<Exact>::identity({2, 4})), InputError);
}

TEST(GroupAction, ElementaryMovesOnColumns) {
  Rng rng(2);
  Matrix<Exact> b = sample_b(rng);
  const Exact lam = q(2, 1);
  auto c = [&](const Matrix<Exact>& m, std::size_t j) { return m.col(j); };

  Matrix<Exact> r = b * elem_pair_rescale(2, 1, lam);
  EXPECT_EQ(c(r, 2), c(b, 2) * lam);
  EXPECT_EQ(c(r, 3), c(b, 3) * (Exact(1) / lam));
  EXPECT_THROW(elem_pair_rescale(2, 0, q(0)), InputError);

  Matrix<Exact> s = b * elem_pair_shear(2, 0, lam);
  EXPECT_EQ(c(s, 0), c(b, 0));
  EXPECT_EQ(c(s, 1), c(b, 1) + c(b, 0) * lam);

  Matrix<Exact> w = b * elem_pair_swap(2, 1);
  EXPECT_EQ(c(w, 2), c(b, 3));
  EXPECT_EQ(c(w, 3), -c(b, 2));

  Matrix<Exact> x = b * elem_cross_shear(2, 0, 1, lam);
  EXPECT_EQ(c(x, 0), c(b, 0) - c(b, 2) * lam);
  EXPECT_EQ(c(x, 3), c(b, 3) + c(b, 1) * lam);
  EXPECT_EQ(c(x, 1), c(b, 1));
  EXPECT_EQ(c(x, 2), c(b, 2));

  Matrix<Exact> p = b * elem_pair_block_swap(2, 0, 1);
  EXPECT_EQ(c(p, 0), c(b, 2));
  EXPECT_EQ(c(p, 3), c(b, 1));

  for (const auto& y : {elem_pair_rescale(2, 1, lam), elem_pair_shear(2, 0, lam),
                        elem_pair_swap(2, 1), elem_cross_shear(2, 0, 1, lam),
                        elem_pair_block_swap(2, 0, 1)}) {
    EXPECT_TRUE(is_symplectic(y));
  }
}

TEST(GroupAction, RotationsAndRescales) {
  Matrix<Exact> x = ortho_rotation<Exact>(2, 0, 1, q(3), q(4));
  EXPECT_EQ(x * Matrix<Exact>::column({q(3), q(4)}), Matrix<Exact>::column({q(5), q(0)}));
  EXPECT_TRUE(is_orthogonal(x));
  EXPECT_EQ(ortho_rotation<Exact>(2, 0, 1, q(1), q(0)), Matrix<Exact>::identity(2));
  EXPECT_EQ(ortho_rotation<Exact>(2, 0, 1, q(0), q(1)) * Matrix<Exact>::column({q(0), q(1)}),
            Matrix<Exact>::column({q(1), q(0)}));
  EXPECT_THROW(ortho_rotation<Exact>(2, 0, 1, q(1), q(0, 1)), InputError);
  EXPECT_THROW(ortho_rotation<Exact>(2, 0, 1, q(1), q(1)), IrrationalRootError);

  EXPECT_EQ(ortho_isotropic_rescale(2, 0, 1, q(1)), Matrix<Exact>::identity(2));
  Matrix<Exact> r = ortho_isotropic_rescale(2, 0, 1, q(2));
  EXPECT_TRUE(is_orthogonal(r));
  EXPECT_EQ(r * Matrix<Exact>::column({q(2), q(0, 2)}), Matrix<Exact>::column({q(1), q(0, 1)}));
  EXPECT_THROW(ortho_isotropic_rescale(2, 0, 1, q(0)), InputError);
}

TEST(GroupAction, CayleyElementsAreExactMembers) {
  EXPECT_EQ(*cayley(Matrix<Exact>(3, 3)), Matrix<Exact>::identity(3));
  Matrix<Exact> a{{q(0), q(1)}, {q(-1), q(0)}};
  Matrix<Exact> x = *cayley(a);
  EXPECT_EQ(x, (Matrix<Exact>{{q(0), q(-1)}, {q(1), q(0)}}));
  EXPECT_TRUE(is_orthogonal(x));

  Rng rng(4);
  bool saw_reflection = false;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 100; ++t) {
      Matrix<Exact> o = random_orthogonal(n, rng);
      ASSERT_TRUE(is_orthogonal(o));
      Exact d = determinant(o);
      EXPECT_TRUE(d == q(1) || d == q(-1));
      saw_reflection = saw_reflection || d == q(-1);
      if (n <= 3) {
        Matrix<Exact> s = random_symplectic(n, rng);
        ASSERT_TRUE(is_symplectic(s));
        EXPECT_EQ(determinant(s), q(1));
      }
    }
  }
  EXPECT_TRUE(saw_reflection);
  EXPECT_EQ(random_orthogonal(4, std::uint64_t{77}), random_orthogonal(4, std::uint64_t{77}));
}
