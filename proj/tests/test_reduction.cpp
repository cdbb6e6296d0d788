#include <gtest/gtest.h>

#include "oracles.hpp"
#include "superform/invariants.hpp"
#include "superform/reduction.hpp"

using namespace superform;
using oracle::q;

namespace {

const std::vector<Exact> kAlphas = {q(2), q(1, 1), q(0, 1)};

// act(B, witness) equals the canonical block juxtaposition.
void expect_sound(const Matrix<Exact>& b, const CanonicalDecomposition& dec) {
  if (dec.exact()) {
    const auto& t = std::get<0>(dec.witness);
    EXPECT_TRUE(is_orthogonal(t.x));
    EXPECT_TRUE(is_symplectic(t.y));
    EXPECT_EQ(act(b, t), juxtapose<Exact>(dec.parts));
    EXPECT_EQ(dec.residual, 0.0);
  } else {
    const auto& t = std::get<1>(dec.witness);
    Matrix<Approx> replay = act(to_approx(b), t);
    EXPECT_LE(max_abs_difference(replay, std::get<1>(dec.canonical)), 1e-30);
    EXPECT_LE(dec.residual, 1e-30);
  }
}

}  // namespace

TEST(Reduction, CanonicalMatricesAsDisplayed) {
  EXPECT_EQ(canonical_matrix(CanonicalLabel::of(Tag::B1)), (Matrix<Exact>{{q(1), q(0)}}));
  EXPECT_EQ(canonical_matrix(CanonicalLabel::of(Tag::B5)),
            (Matrix<Exact>{{q(1), q(0), q(0), q(0)}, {q(0), q(1), q(1), q(0)}, {q(0), q(0), q(0), q(0, 1)}}));
  EXPECT_EQ(canonical_matrix(CanonicalLabel::of(Tag::B6)),
            (Matrix<Exact>{{q(1), q(0)}, {q(0, 1), q(0)}, {q(0), q(1)}, {q(0), q(0, 1)}}));
  EXPECT_EQ(canonical_matrix(CanonicalLabel::b2(q(1, 1))), (Matrix<Exact>{{q(1), q(0)}, {q(0), q(1, 1)}}));
  EXPECT_THROW(canonical_matrix(CanonicalLabel::of(Tag::B4), SuperDims{2, 2}), InputError);
}

TEST(Reduction, TableRowsClassifyToThemselves) {
  for (const auto& label : table_labels(kAlphas)) {
    Matrix<Exact> b = canonical_matrix(label);
    CanonicalDecomposition dec = classify(b);
    ASSERT_EQ(dec.parts.size(), 1u) << label.name();
    EXPECT_EQ(dec.parts[0], label);
    EXPECT_TRUE(dec.exact());
    expect_sound(b, dec);
    EXPECT_EQ(signature(b), signature(juxtapose<Exact>(dec.parts)));
  }
}

TEST(Reduction, ReducibleExamples) {
  CanonicalDecomposition dec = classify(Matrix<Exact>{{q(1), q(0)}, {q(0), q(0)}});
  EXPECT_EQ(dec.summary(), "B1 + TrivEven");
  EXPECT_FALSE(dec.irreducible());
  CanonicalDecomposition zero = classify(Matrix<Exact>(1, 2));
  EXPECT_EQ(zero.summary(), "TrivEven + TrivOdd");
  CanonicalDecomposition two = classify(juxtapose<Exact>({CanonicalLabel::b2(q(0, 1)), CanonicalLabel::of(Tag::B1)}));
  EXPECT_EQ(two.summary(), "B1 + B2(alpha=i)");
}

TEST(Reduction, OrbitStability) {
  Rng rng(31);
  for (const auto& label : table_labels(kAlphas)) {
    Matrix<Exact> b = canonical_matrix(label);
    for (int t = 0; t < 20; ++t) {
      Matrix<Exact> c = act(b, random_transform(label.dims(), rng));
      CanonicalDecomposition dec = classify(c);
      ASSERT_EQ(dec.parts.size(), 1u);
      EXPECT_EQ(dec.parts[0], label);
      expect_sound(c, dec);
    }
  }
}

TEST(Reduction, RandomBlocksAreSoundAndStable) {
  Rng rng(32);
  for (const auto& d : oracle::shapes()) {
    for (int t = 0; t < 6; ++t) {
      Matrix<Exact> b = random_matrix(d.k, d.two_ell, rng);
      CanonicalDecomposition dec = classify(b);
      expect_sound(b, dec);
      CanonicalDecomposition again = classify(act(b, random_transform(d, rng)));
      EXPECT_EQ(again.parts, dec.parts);
      EXPECT_EQ(signature(b), signature(act(b, random_transform(d, rng))));
    }
  }
}

TEST(Reduction, SparseSmallEntriesAlwaysClassify) {
  // Entries from {0, 1, i, -1}: many degenerate, isotropic and nilpotent cases.
  Rng rng(33);
  const Exact pool[] = {q(0), q(0), q(1), q(0, 1), q(-1)};
  std::uniform_int_distribution<int> pick(0, 4);
  for (const auto& d : oracle::shapes()) {
    if (d.total() > 5) continue;
    for (int t = 0; t < 40; ++t) {
      Matrix<Exact> b(d.k, d.two_ell);
      for (std::size_t i = 0; i < d.k; ++i)
        for (std::size_t j = 0; j < d.two_ell; ++j) b(i, j) = pool[pick(rng)];
      CanonicalDecomposition dec = classify(b);
      expect_sound(b, dec);
    }
  }
}

TEST(Reduction, ForcedApproximateWitness) {
  ClassifyOptions opts;
  opts.force_approx = true;
  Matrix<Exact> b = canonical_matrix(CanonicalLabel::of(Tag::B5));
  CanonicalDecomposition dec = classify(b, opts);
  EXPECT_FALSE(dec.exact());
  EXPECT_EQ(dec.parts[0], CanonicalLabel::of(Tag::B5));
  expect_sound(b, dec);
}

TEST(Reduction, IrrationalAlphaFallsBackToApproximate) {
  Rng rng(36);
  bool seen = false;
  for (int t = 0; t < 50 && !seen; ++t) {
    Matrix<Exact> b = random_matrix(3, 4, rng);
    CanonicalDecomposition dec = classify(b);
    expect_sound(b, dec);
    if (dec.exact()) continue;
    seen = true;
    bool irrational = false;
    for (const auto& p : dec.parts) {
      if (p.tag == Tag::B2 && !p.alpha_exact()) irrational = true;
    }
    EXPECT_TRUE(irrational) << dec.summary();
  }
  EXPECT_TRUE(seen);
}

TEST(Reduction, Distinctness) {
  auto labels = table_labels(kAlphas);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (labels[i].dims() != labels[j].dims()) continue;
      EXPECT_EQ(equivalent(canonical_matrix(labels[i]), canonical_matrix(labels[j])), i == j)
          << labels[i].name() << " vs " << labels[j].name();
    }
  }
  Rng rng(34);
  Matrix<Exact> b2 = canonical_matrix(CanonicalLabel::b2(q(2)));
  EXPECT_TRUE(equivalent(b2, act(b2, random_transform({2, 2}, rng))));
  // alpha and -alpha give the same orbit, so labels use alpha in C+.
  EXPECT_TRUE(equivalent(b2, Matrix<Exact>{{q(1), q(0)}, {q(0), q(-2)}}));
  auto b6 = canonical_matrix(CanonicalLabel::of(Tag::B6));
  auto b4t = juxtapose<Exact>({CanonicalLabel::of(Tag::B4), CanonicalLabel::of(Tag::TrivEven)});
  EXPECT_FALSE(equivalent(b6, b4t));
  EXPECT_THROW(equivalent(b6, b2), InputError);
}

TEST(Reduction, RangeAndBounds) {
  EXPECT_THROW(classify(Matrix<Exact>(2, 6)), OutOfRangeError);
  EXPECT_THROW(classify(Matrix<Exact>(2, 3)), InputError);
  EXPECT_TRUE(dimension_bound_check({1, 2}));
  EXPECT_TRUE(dimension_bound_check({4, 2}));
  EXPECT_FALSE(dimension_bound_check({5, 2}));
  EXPECT_FALSE(dimension_bound_check({1, 4}));
}

TEST(Reduction, BoundViolatingShapesDecompose) {
  Rng rng(35);
  for (SuperDims d : {SuperDims{1, 4}, SuperDims{1, 6}, SuperDims{5, 2}}) {
    for (int t = 0; t < 20; ++t) {
      EXPECT_GE(classify(random_matrix(d.k, d.two_ell, rng)).parts.size(), 2u);
    }
  }
}

TEST(Reduction, ReduceVector) {
  auto check = [](const Matrix<Exact>& b, const Matrix<Exact>& expected) {
    auto r = reduce_vector(b);
    ASSERT_EQ(r.index(), 0u);
    const auto& e = std::get<0>(r);
    EXPECT_TRUE(is_orthogonal(e.x));
    EXPECT_EQ(e.x * b, expected);
    EXPECT_EQ(e.canonical, expected);
  };
  check(Matrix<Exact>::column({q(3), q(4)}), Matrix<Exact>::column({q(5), q(0)}));
  check(Matrix<Exact>::column({q(1), q(0, 1)}), Matrix<Exact>::column({q(1), q(0, 1)}));
  check(Matrix<Exact>::column({q(2), q(0, 2), q(0)}), Matrix<Exact>::column({q(1), q(0, 1), q(0)}));
  check(Matrix<Exact>::column({q(1), q(2), q(2)}), Matrix<Exact>::column({q(3), q(0), q(0)}));
  check(Matrix<Exact>::column({q(0), q(0)}), Matrix<Exact>::column({q(0), q(0)}));
  check(Matrix<Exact>::column({q(-4)}), Matrix<Exact>::column({q(4)}));

  auto r = reduce_vector(Matrix<Exact>::column({q(1), q(1)}));
  ASSERT_EQ(r.index(), 1u);
  const auto& a = std::get<1>(r);
  Matrix<Approx> image = a.x * to_approx(Matrix<Exact>::column({q(1), q(1)}));
  EXPECT_TRUE(approx_eq(image(0, 0) * image(0, 0), Approx(2)));
  EXPECT_TRUE(image(1, 0).is_negligible());
}

TEST(Reduction, AnisotropicCombination) {
  EXPECT_EQ(*find_anisotropic_combination(canonical_matrix(CanonicalLabel::b2(q(2)))),
            (std::vector<Exact>{q(1), q(0)}));
  EXPECT_FALSE(find_anisotropic_combination(canonical_matrix(CanonicalLabel::of(Tag::B3))));
  Matrix<Exact> b{{q(1), q(1)}, {q(0, 1), q(0, -1)}};
  EXPECT_EQ(*find_anisotropic_combination(b), (std::vector<Exact>{q(1), q(1)}));
}
