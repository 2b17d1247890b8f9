#include "weakram/tower_build.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "weakram/laurent.hpp"
#include "weakram/padic.hpp"
#include "weakram/roots.hpp"

using namespace weakram;

namespace {

Poly<PadicElem> ipoly(const PadicPtr& F, std::vector<long> c) {
  Poly<PadicElem> out;
  for (long v : c) out.push_back(F->from_int(v, F->work_prec()));
  return out;
}

}  // namespace

TEST(ExtensionBuildTest, RamifiedQuadratic) {
  auto Q5 = PadicField::make(5, 1, 40);
  auto ext = ext_create(Q5, ipoly(Q5, {-5, 0, 1}));
  EXPECT_EQ(ext.tower->e(), 2);
  EXPECT_EQ(ext.tower->f_rel(), 1);
  auto diff = ext.alpha * ext.alpha - ext.tower->from_int(5, 30);
  EXPECT_TRUE(diff.is_zero_mod(std::min(diff.precision(), 30L)));
  EXPECT_EQ(ext.alpha.val(), 1);
}

TEST(ExtensionBuildTest, TameQuarticStaysEisenstein) {
  auto Q5 = PadicField::make(5, 1, 40);
  auto ext = ext_create(Q5, ipoly(Q5, {-5, 0, 0, 0, 1}));
  EXPECT_EQ(ext.tower->e(), 4);
  EXPECT_EQ(ext.tower->f_rel(), 1);
  auto a2 = ext.alpha * ext.alpha;
  auto diff = a2 * a2 - ext.tower->from_int(5, 40);
  EXPECT_TRUE(diff.is_zero_mod(diff.precision()));
  // The input was already a uniformizer relation, so it survives unchanged.
  const auto& eis = ext.tower->eisenstein();
  EXPECT_TRUE((eis[0] + Q5->from_int(5, 20)).is_zero_mod(15));
  for (int i = 1; i < 4; ++i)
    EXPECT_TRUE(eis[i].is_prec_zero() || eis[i].val() >= 15);
}

TEST(ExtensionBuildTest, UnramifiedQuadratic) {
  auto Q5 = PadicField::make(5, 1, 40);
  auto ext = ext_create(Q5, ipoly(Q5, {1, -1, 1}));
  EXPECT_EQ(ext.tower->e(), 1);
  EXPECT_EQ(ext.tower->f_rel(), 2);
  auto diff = ext.alpha * ext.alpha - ext.alpha + ext.tower->one(30);
  EXPECT_TRUE(diff.is_zero_mod(diff.precision()));
  EXPECT_EQ(ext.alpha.val(), 0);
}

TEST(ExtensionBuildTest, WildSexticIsTotallyRamified) {
  auto Q3 = PadicField::make(3, 1, 60);
  auto ext = ext_create(Q3, ipoly(Q3, {6, 0, 6, 0, 0, 0, 1}));
  EXPECT_EQ(ext.tower->e(), 6);
  EXPECT_EQ(ext.tower->f_rel(), 1);
  const auto& eis = ext.tower->eisenstein();
  EXPECT_TRUE((eis[0] - Q3->from_int(6, 20)).is_zero_mod(18));
  EXPECT_TRUE((eis[2] - Q3->from_int(6, 20)).is_zero_mod(18));
  auto a = ext.alpha;
  auto a2 = a * a;
  auto lhs = a2 * a2 * a2 + ext.tower->from_int(6, 60) * a2 + ext.tower->from_int(6, 60);
  EXPECT_TRUE(lhs.is_zero_mod(lhs.precision()));
}

TEST(ExtensionBuildTest, RecentredCubicFindsEisensteinModel) {
  auto Q3 = PadicField::make(3, 1, 60);
  auto ext = ext_create(Q3, ipoly(Q3, {1, -3, 0, 1}));
  EXPECT_EQ(ext.tower->e(), 3);
  EXPECT_EQ(ext.tower->f_rel(), 1);
  // theta = alpha - 2 is a uniformizer with theta^3 + 6 theta^2 + 9 theta + 3 = 0.
  const auto& eis = ext.tower->eisenstein();
  EXPECT_TRUE((eis[0] - Q3->from_int(3, 20)).is_zero_mod(18));
  EXPECT_TRUE((eis[1] - Q3->from_int(9, 20)).is_zero_mod(18));
  EXPECT_TRUE((eis[2] - Q3->from_int(6, 20)).is_zero_mod(18));
  auto a = ext.alpha;
  auto lhs = a * a * a - ext.tower->from_int(3, 60) * a + ext.tower->one(60);
  EXPECT_TRUE(lhs.is_zero_mod(lhs.precision()));
  EXPECT_EQ((a - ext.tower->from_int(2, 60)).val(), 1);
}

TEST(ExtensionBuildTest, MixedQuarticPeelsUnramifiedPart) {
  auto Q3 = PadicField::make(3, 1, 60);
  auto ext = ext_create(Q3, ipoly(Q3, {-18, 0, 0, 0, 1}));
  EXPECT_EQ(ext.tower->e(), 2);
  EXPECT_EQ(ext.tower->f_rel(), 2);
  EXPECT_EQ(ext.tower->m(), 4);
  auto a2 = ext.alpha * ext.alpha;
  auto diff = a2 * a2 - ext.tower->from_int(18, 60);
  EXPECT_TRUE(diff.is_zero_mod(diff.precision()));
  EXPECT_EQ(ext.alpha.val(), 1);  // v_L(alpha) = v_L(18)/4 wants e = 2
}

TEST(ExtensionBuildTest, ArtinSchreierWithPoleGetsIntegralised) {
  auto F2t = LaurentField::make(2, 1, 40);
  auto tinv = F2t->one(38) / F2t->one(38).shifted(1);
  Poly<LaurentElem> g{F2t->zero(38) - tinv, F2t->zero(38) - F2t->one(38), F2t->one(38)};
  auto ext = ext_create(F2t, g);
  EXPECT_EQ(ext.tower->e(), 2);
  EXPECT_EQ(ext.tower->f_rel(), 1);
  // beta = t alpha satisfies beta^2 + t beta + t = 0.
  const auto& eis = ext.tower->eisenstein();
  auto t = F2t->one(30).shifted(1);
  EXPECT_TRUE((eis[0] - t).is_zero_mod(20));
  EXPECT_TRUE((eis[1] - t).is_zero_mod(20));
  EXPECT_EQ(ext.alpha.val(), -1);
  auto lhs = ext.alpha * ext.alpha - ext.alpha - ext.tower->from_u(tinv, 40);
  EXPECT_TRUE(lhs.is_zero_mod(lhs.precision()));
}

TEST(ExtensionBuildTest, LaurentUnramifiedQuadratic) {
  auto F2t = LaurentField::make(2, 1, 40);
  auto one = F2t->one(38);
  Poly<LaurentElem> g{one, one, one};
  auto ext = ext_create(F2t, g);
  EXPECT_EQ(ext.tower->e(), 1);
  EXPECT_EQ(ext.tower->f_rel(), 2);
  auto lhs = ext.alpha * ext.alpha + ext.alpha + ext.tower->one(38);
  EXPECT_TRUE(lhs.is_zero_mod(lhs.precision()));
}

TEST(ExtensionBuildTest, ReducibleInputsAreRejected) {
  auto Q5 = PadicField::make(5, 1, 40);
  EXPECT_THROW(ext_create(Q5, ipoly(Q5, {-1, 0, 1})), reducible_polynomial);
  EXPECT_THROW(ext_create(Q5, ipoly(Q5, {-25, 0, 0, 0, 1})), reducible_polynomial);
  auto Q3 = PadicField::make(3, 1, 40);
  EXPECT_THROW(ext_create(Q3, ipoly(Q3, {2, -3, 0, 1})), reducible_polynomial);
}

TEST(ExtensionBuildTest, FactorThroughBaseRootSurfacesAsPrecisionLoss) {
  // (x - 3)(x - 12) recentres onto an exact base root; the constant term
  // becomes indistinguishable from zero rather than provably nonzero.
  auto Q3 = PadicField::make(3, 1, 40);
  EXPECT_THROW(ext_create(Q3, ipoly(Q3, {36, -15, 1})), precision_exhausted);
}

TEST(ExtensionBuildTest, PartialRamificationDataIsUnsupported) {
  auto Q3 = PadicField::make(3, 1, 40);
  EXPECT_THROW(ext_create(Q3, ipoly(Q3, {36, 0, -6, 0, 1})), unsupported_polynomial);
}

TEST(ExtensionBuildTest, InseparablePolynomialIsUnsupported) {
  auto F2t = LaurentField::make(2, 1, 40);
  auto t = F2t->one(38).shifted(1);
  Poly<LaurentElem> g{F2t->zero(38) - t, F2t->zero(38), F2t->one(38)};
  EXPECT_THROW(ext_create(F2t, g), unsupported_polynomial);
}

TEST(ExtensionBuildTest, RootListingInsideTower) {
  auto Q5 = PadicField::make(5, 1, 40);
  auto ext = ext_create(Q5, ipoly(Q5, {-5, 0, 1}));
  auto L = ext.tower;
  // x^2 - 5 has both square roots in L; x^2 - 2 has none.
  Poly<TowerElem<PadicField>> f{L->from_int(-5, 40), L->zero(40), L->one(40)};
  auto roots = tower_poly_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE((roots[0] + roots[1]).is_zero_mod(30));
  Poly<TowerElem<PadicField>> f2{L->from_int(-2, 40), L->zero(40), L->one(40)};
  EXPECT_TRUE(tower_poly_roots(f2).empty());
}
