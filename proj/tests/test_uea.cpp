#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superform/uea.hpp"

using namespace superform;
using oracle::frac;
using oracle::q;

namespace {

AlgebraPtr algebra(bool inhomogeneous) {
  return std::make_shared<const SuperAlgebra>(oscillator_algebra(
      inhomogeneous ? inhomogeneous_example_form() : homogeneous_example_form()));
}

UEAElement gen(const AlgebraPtr& a, const char* name) { return UEAElement::generator(a, name); }

UEAElement word(const AlgebraPtr& a, std::vector<std::size_t> w, RewriteStrategy s) {
  return normal_order(a, {{std::move(w), Exact(1)}}, s);
}

UEAElement random_word(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, a->dim() - 1);
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(pick(rng));
  return word(a, w, RewriteStrategy::Leftmost);
}

// Expected coordinates over the span {H, E+, E-, F+, F-, kappa H, ...}.
Coords span(std::initializer_list<std::pair<const char*, Exact>> terms, const BracketTable& t) {
  Coords c(BracketTable::kSpan);
  for (const auto& [name, v] : terms) c[t.index(name)] = v;
  return c;
}

}  // namespace

TEST(UEA, BasicProducts) {
  AlgebraPtr h = algebra(false);
  UEAElement a = gen(h, "a"), b1 = gen(h, "b1"), b2 = gen(h, "b2"), K = gen(h, "K"),
             kappa = gen(h, "kappa");
  EXPECT_EQ(to_string(a * a), "1/2 * K");
  EXPECT_EQ(b2 * b1, b1 * b2 - K);
  EXPECT_EQ(to_string(b2 * b1), "b1 b2 - K");
  EXPECT_TRUE((kappa * kappa).is_zero());
  EXPECT_EQ(word(h, {1, 0}, RewriteStrategy::Rightmost), b1 * b2 - K);
  EXPECT_THROW(normal_product(a, gen(algebra(false), "a")), InputError);
}

TEST(UEA, SuperBrackets) {
  AlgebraPtr inh = algebra(true);
  UEAElement b1 = gen(inh, "b1"), b2 = gen(inh, "b2"), a = gen(inh, "a");
  EXPECT_EQ(super_bracket(b1, b2), gen(inh, "K"));
  EXPECT_EQ(super_bracket(b1, a), gen(inh, "kappa"));
  EXPECT_EQ(super_bracket(a, a), gen(inh, "K"));
  for (std::size_t i = 0; i < 5; ++i) {
    UEAElement x = UEAElement::generator(inh, i);
    EXPECT_TRUE(super_bracket(gen(inh, "K"), x).is_zero());
    EXPECT_TRUE(super_bracket(gen(inh, "kappa"), x).is_zero());
  }
  EXPECT_THROW(super_bracket(b1 + a, b2), InputError);
}

TEST(UEA, RewritingIsConfluent) {
  std::mt19937_64 rng(51);
  for (bool inh : {false, true}) {
    AlgebraPtr alg = algebra(inh);
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    for (int t = 0; t < 250; ++t) {
      std::vector<std::size_t> w = {pick(rng), pick(rng), pick(rng)};
      EXPECT_EQ(word(alg, w, RewriteStrategy::Leftmost), word(alg, w, RewriteStrategy::Rightmost));
    }
  }
}

TEST(UEA, ProductIsAssociative) {
  std::mt19937_64 rng(52);
  AlgebraPtr alg = algebra(true);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  for (int t = 0; t < 100; ++t) {
    UEAElement u = random_word(alg, rng, len(rng));
    UEAElement v = random_word(alg, rng, len(rng));
    UEAElement w = random_word(alg, rng, len(rng));
    EXPECT_EQ((u * v) * w, u * (v * w));
  }
}

TEST(UEA, BracketIsSuperSkewAndJacobi) {
  std::mt19937_64 rng(53);
  AlgebraPtr alg = algebra(true);
  std::uniform_int_distribution<std::size_t> len(1, 2);
  for (int t = 0; t < 60; ++t) {
    UEAElement x = random_word(alg, rng, len(rng));
    UEAElement y = random_word(alg, rng, len(rng));
    UEAElement z = random_word(alg, rng, len(rng));
    if (!x.parity() || !y.parity() || !z.parity() || x.is_zero()) continue;
    const int px = *x.parity(), py = *y.parity(), pz = *z.parity();
    UEAElement skew = super_bracket(x, y) + Exact((px && py) ? -1 : 1) * super_bracket(y, x);
    EXPECT_TRUE(skew.is_zero());
    UEAElement jac = Exact((px && pz) ? -1 : 1) * super_bracket(x, super_bracket(y, z)) +
                     Exact((py && px) ? -1 : 1) * super_bracket(y, super_bracket(z, x)) +
                     Exact((pz && py) ? -1 : 1) * super_bracket(z, super_bracket(x, y));
    EXPECT_TRUE(jac.is_zero()) << to_string(jac);
  }
}

TEST(UEA, OspGenerators) {
  AlgebraPtr h = algebra(false);
  OspGenerators g = osp_generators(h);
  EXPECT_EQ(g[0], frac(1, 2) * (gen(h, "b1") * gen(h, "b2")) - frac(1, 4) * gen(h, "K"));
  EXPECT_EQ(to_string(g[0]), "1/2 * b1 b2 - 1/4 * K");
  EXPECT_EQ(g[3], frac(1, 2) * (gen(h, "b2") * gen(h, "a")));
  const int parities[] = {0, 0, 0, 1, 1};
  for (std::size_t i = 0; i < kOspDim; ++i) EXPECT_EQ(g[i].parity(), parities[i]);

  auto bad = std::make_shared<const SuperAlgebra>(
      oscillator_algebra(parity_reverse(make_standard_gram(Matrix<Exact>{{q(1), q(0)}, {q(0), q(1)}}))));
  EXPECT_THROW(osp_generators(bad), InputError);
}

TEST(UEA, HomogeneousTable) {
  BracketTable t = bracket_table(osp_generators(algebra(false)));
  auto at = [&](const char* a, const char* b) { return t.at(t.index(a), t.index(b)); };
  EXPECT_EQ(at("H", "E+"), span({{"E+", q(1)}}, t));
  EXPECT_EQ(at("H", "E-"), span({{"E-", q(-1)}}, t));
  EXPECT_EQ(at("E+", "E-"), span({{"H", q(2)}}, t));
  EXPECT_EQ(at("H", "F+"), span({{"F+", frac(1, 2)}}, t));
  EXPECT_EQ(at("H", "F-"), span({{"F-", frac(-1, 2)}}, t));
  EXPECT_EQ(at("F+", "F-"), span({{"H", frac(1, 2)}}, t));
  EXPECT_EQ(at("E+", "F-"), span({{"F+", q(-1)}}, t));
  EXPECT_EQ(at("E-", "F+"), span({{"F-", q(-1)}}, t));
  EXPECT_EQ(at("F+", "F+"), span({{"E+", frac(1, 2)}}, t));
  EXPECT_EQ(at("F-", "F-"), span({{"E-", frac(-1, 2)}}, t));
}

TEST(UEA, DeformedTable) {
  BracketTable t = bracket_table(osp_generators(algebra(true)));
  auto at = [&](const char* a, const char* b) { return t.at(t.index(a), t.index(b)); };
  EXPECT_EQ(at("H", "E+"), span({{"E+", q(1)}}, t));
  EXPECT_EQ(at("H", "E-"), span({{"E-", q(-1)}}, t));
  EXPECT_EQ(at("E-", "F-"), span({{"kappa E-", q(1)}}, t));
  EXPECT_EQ(at("H", "F+"), span({{"F+", frac(1, 2)}, {"kappa E+", frac(1, 2)}}, t));
  EXPECT_EQ(at("E+", "E-"), span({{"H", q(2)}}, t));
  EXPECT_EQ(at("H", "F-"), span({{"F-", frac(-1, 2)}, {"kappa H", frac(1, 2)}}, t));
  EXPECT_EQ(at("F+", "F-"), span({{"H", frac(1, 2)}, {"kappa F+", frac(-1, 2)}}, t));
  EXPECT_EQ(at("E+", "F-"), span({{"F+", q(-1)}}, t));
  EXPECT_EQ(at("F+", "F+"), span({{"E+", frac(1, 2)}}, t));
  EXPECT_EQ(at("E-", "F+"), span({{"F-", q(-1)}, {"kappa H", q(-1)}}, t));
  EXPECT_EQ(at("F-", "F-"), span({{"E-", frac(-1, 2)}, {"kappa F-", q(-1)}}, t));

  AlgebraPtr alg = algebra(true);
  EXPECT_TRUE((gen(alg, "kappa") * gen(alg, "kappa")).is_zero());
}

TEST(UEA, ClosureFailureIsReported) {
  OspGenerators g = osp_generators(algebra(false));
  g.g[0] = UEAElement::generator(g.algebra, "b1");
  EXPECT_THROW(bracket_table(g), VerificationError);
}

TEST(UEA, CocycleAndTriviality) {
  BracketTable hom = bracket_table(osp_generators(algebra(false)));
  BracketTable inh = bracket_table(osp_generators(algebra(true)));
  CocycleTable c = cocycle_from_table(inh);
  EXPECT_EQ(c.base, cocycle_from_table(hom).base);
  // gamma(H, F+) = E+/2, gamma(H, E+) = 0, gamma(F-, F-) = -F-.
  EXPECT_EQ(c.gamma[0][3], (Coords{q(0), frac(1, 2), q(0), q(0), q(0)}));
  EXPECT_EQ(c.gamma[0][1], Coords(kOspDim));
  EXPECT_EQ(c.gamma[4][4], (Coords{q(0), q(0), q(0), q(0), q(-1)}));

  TrivialityReport given = triviality_check(c, trivializing_map());
  EXPECT_TRUE(given.ok());
  EXPECT_EQ(given.pairs_checked, 25u);

  OspMap zero;
  for (auto& v : zero) v = Coords(kOspDim);
  TrivialityReport none = triviality_check(c, zero);
  std::size_t nonzero_gamma = 0;
  for (std::size_t a = 0; a < kOspDim; ++a)
    for (std::size_t b = 0; b < kOspDim; ++b)
      if (c.gamma[a][b] != Coords(kOspDim)) ++nonzero_gamma;
  EXPECT_EQ(none.defects.size(), nonzero_gamma);
  for (const auto& d : none.defects) EXPECT_NE(c.gamma[d.a][d.b], Coords(kOspDim));

  // Hand evaluation for (H, F+): [H, E+] - f([H, F+]) = E+ - E+/2.
  OspBracket base = c.base;
  EXPECT_EQ(base[0][1], (Coords{q(0), q(1), q(0), q(0), q(0)}));
  EXPECT_EQ(base[0][3], (Coords{q(0), q(0), q(0), frac(1, 2), q(0)}));

  // The homogeneous table has no cocycle at all.
  EXPECT_TRUE(triviality_check(cocycle_from_table(hom), zero).ok());
}

TEST(UEA, AdjointIdeal) {
  BracketTable t = bracket_table(osp_generators(algebra(true)));
  EXPECT_TRUE(adjoint_ideal_check(t));
  EXPECT_EQ(t.at(t.index("H"), t.index("kappa E+")), span({{"kappa E+", q(1)}}, t));
  EXPECT_EQ(t.at(t.index("kappa F+"), t.index("kappa F-")), Coords(BracketTable::kSpan));
  EXPECT_EQ(t.at(t.index("E+"), t.index("kappa E-")), span({{"kappa H", q(2)}}, t));
  BracketTable broken = t;
  broken.entries[0][6][6] = q(7);
  EXPECT_FALSE(adjoint_ideal_check(broken));
}
