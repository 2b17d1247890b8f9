#include <gtest/gtest.h>

#include <vector>

#include "weakram/generator.hpp"
#include "weakram/laurent.hpp"
#include "weakram/padic.hpp"

using namespace weakram;

namespace {

Poly<PadicElem> ipoly(const PadicPtr& F, std::vector<long> c) {
  Poly<PadicElem> g;
  for (long x : c) g.push_back(F->from_int(x, F->work_prec()));
  return g;
}

Extension<PadicField> ramified_quadratic() {
  auto Q5 = PadicField::make(5, 1, 24);
  return analyze_galois_extension(Q5, ipoly(Q5, {-5, 0, 1}));
}

Extension<PadicField> ramified_quartic() {
  auto Q5 = PadicField::make(5, 1, 32);
  return analyze_galois_extension(Q5, ipoly(Q5, {-5, 0, 0, 0, 1}));
}

Extension<LaurentField> artin_schreier_quadratic() {
  auto F2t = LaurentField::make(2, 1, 24);
  Poly<LaurentElem> g{F2t->zero(24) - F2t->one(24).shifted(-1),
                      F2t->zero(24) - F2t->one(24), F2t->one(24)};
  return analyze_galois_extension(F2t, g);
}

Extension<PadicField> flagship_sextic() {
  auto Q3 = PadicField::make(3, 1, 60);
  return analyze_galois_extension(Q3, ipoly(Q3, {6, 0, 6, 0, 0, 0, 1}));
}

}  // namespace

TEST(GeneratorTest, TameQuadraticGeneratorsAcrossExponents) {
  auto ext = ramified_quadratic();
  for (long n : {0L, 1L, 4L, -2L}) {
    auto res = gen_tot_tame(ext, n, {});
    EXPECT_TRUE(res.cert.free_generator);
    EXPECT_EQ(res.delta.val(), n);
    EXPECT_EQ(res.trace.method, "tot_tame");
    EXPECT_EQ(res.trace.tame_order, 2);
    EXPECT_EQ(res.trace.wild_order, 1);
  }
}

TEST(GeneratorTest, TameQuarticHonorsUnitChoices) {
  auto ext = ramified_quartic();
  auto plain = gen_tot_tame(ext, 1, {});
  EXPECT_TRUE(plain.cert.free_generator);
  EXPECT_EQ(plain.trace.units, (std::vector<long>{1, 1, 1, 1}));
  auto twisted = gen_tot_tame(ext, 1, {1, 2, 1, 3});
  EXPECT_TRUE(twisted.cert.free_generator);
  EXPECT_FALSE((plain.delta - twisted.delta).is_prec_zero());
  EXPECT_THROW(gen_tot_tame(ext, 1, {5, 1, 1, 1}), parse_error);
  EXPECT_THROW(gen_tot_tame(ext, 1, {1, 1, 1, 1, 1}), parse_error);
}

TEST(GeneratorTest, KummerNormalizationIsExact) {
  auto ext = ramified_quartic();
  std::vector<int> trivial{ext.id_index};
  auto tu = ext_tame_kummer_uniformizer(ext, trivial, 4);
  auto fourth = tower_pow(tu.pi, 4);
  auto target = ext.L->from_u(tu.unit.shifted(1), ext.L->work_prec());
  EXPECT_TRUE((fourth - target).is_prec_zero());
  EXPECT_EQ(tu.unit.val(), 0);
}

TEST(GeneratorTest, ArtinSchreierUniformizerPowers) {
  auto ext = artin_schreier_quadratic();
  for (long n : {1L, 3L, -1L}) {
    auto res = gen_tot_weak_p(ext, n);
    EXPECT_TRUE(res.cert.free_generator);
    EXPECT_EQ(res.delta.val(), n);
    EXPECT_EQ(res.trace.wild_order, 2);
  }
  EXPECT_THROW(gen_tot_weak_p(ext, 2), bad_exponent);
  EXPECT_THROW(gen_tot_weak_p(ext, 0), bad_exponent);
}

TEST(GeneratorTest, MixedSexticTotallyRamifiedGenerator) {
  auto ext = flagship_sextic();
  ASSERT_TRUE(ext.weakly_ramified);
  auto res = gen_tot_weak(ext, 1, {});
  EXPECT_TRUE(res.cert.free_generator);
  EXPECT_EQ(res.delta.val(), 1);
  EXPECT_EQ(res.trace.tame_order, 2);
  EXPECT_EQ(res.trace.wild_order, 3);
  EXPECT_EQ(res.trace.bezout_a, 1);
  EXPECT_EQ(res.trace.bezout_b, -1);
  EXPECT_THROW(gen_tot_weak(ext, 2, {}), bad_exponent);

  auto again = gen_tot_weak(ext, 4, {});
  EXPECT_TRUE(again.cert.free_generator);
  EXPECT_EQ(again.delta.val(), 4);
}

TEST(GeneratorTest, ConstructionIsDeterministic) {
  auto ext = flagship_sextic();
  auto a = gen_tot_weak(ext, 1, {});
  auto b = gen_tot_weak(ext, 1, {});
  EXPECT_TRUE((a.delta - b.delta).is_prec_zero());
  EXPECT_EQ(a.trace.units, b.trace.units);
  auto ca = ext.L->base_coords(a.delta);
  auto cb = ext.L->base_coords(b.delta);
  for (std::size_t t = 0; t < ca.size(); ++t)
    EXPECT_TRUE((ca[t] - cb[t]).is_prec_zero());
}

TEST(GeneratorTest, UnramifiedNormalBasisGenerator) {
  auto Q5 = PadicField::make(5, 1, 24);
  auto ext = analyze_galois_tower(ext_unramified(Q5, 3));
  for (long n : {0L, 2L, -1L}) {
    auto res = gen_unramified(ext, n, 7);
    EXPECT_TRUE(res.cert.free_generator);
    EXPECT_EQ(res.delta.val(), n);
    EXPECT_EQ(res.trace.method, "unramified");
  }
  EXPECT_THROW(gen_unramified(ramified_quadratic(), 0, 7), invalid_degree);
}

TEST(GeneratorTest, DoublySplitHandlesUnramifiedShape) {
  auto Q5 = PadicField::make(5, 1, 24);
  auto ext = analyze_galois_tower(ext_unramified(Q5, 2));
  auto res = gen_doubly_split(ext, 1, {}, 11);
  EXPECT_TRUE(res.cert.free_generator);
  EXPECT_EQ(res.delta.val(), 1);
  EXPECT_EQ(res.trace.tame_order, 1);
  EXPECT_EQ(res.trace.wild_order, 1);
}

TEST(GeneratorTest, GeneralConstructionDescendsArtinSchreier) {
  auto ext = artin_schreier_quadratic();
  auto res = gen_general(ext, 1, {}, 5);
  EXPECT_TRUE(res.cert.free_generator);
  EXPECT_EQ(res.delta.val(), 1);
  EXPECT_EQ(res.trace.method, "trace_descent");
  EXPECT_EQ(res.trace.unram_steps, 2);
  EXPECT_EQ(res.trace.wild_order, 2);
}

TEST(GeneratorTest, GeneralConstructionMatchesDirectTame) {
  auto ext = ramified_quadratic();
  auto res = gen_general(ext, 1, {}, 5);
  EXPECT_TRUE(res.cert.free_generator);
  EXPECT_EQ(res.delta.val(), 1);
  EXPECT_EQ(res.trace.unram_steps, 2);
}

TEST(GeneratorTest, WrongShapesAreRejected) {
  auto tame = ramified_quadratic();
  EXPECT_THROW(gen_tot_weak_p(tame, 1), invalid_degree);
  auto as = artin_schreier_quadratic();
  EXPECT_THROW(gen_tot_tame(as, 1, {}), wild_degree);
  auto Q5 = PadicField::make(5, 1, 24);
  auto unram = analyze_galois_tower(ext_unramified(Q5, 2));
  EXPECT_THROW(gen_tot_tame(unram, 1, {}), not_totally_ramified);
  EXPECT_THROW(gen_tot_weak(unram, 1, {}), not_totally_ramified);
}

TEST(GeneratorTest, SubfieldUniformizerValuations) {
  auto ext = flagship_sextic();
  FiniteGroup g(ext.table);
  std::vector<int> all;
  for (int k = 0; k < g.order(); ++k) all.push_back(k);
  auto sd = grp_doubly_split(g, all, g.identity(), 3);
  auto pit = ext_subfield_uniformizer(ext, sd.T);
  EXPECT_EQ(pit.val(), 2);
  auto pis = ext_subfield_uniformizer(ext, sd.S);
  EXPECT_EQ(pis.val(), 3);
  for (int k : sd.T) EXPECT_TRUE((ext.apply(k, pit) - pit).is_prec_zero());
}

TEST(GeneratorTest, AssociatedOrderTheoremHoldsOnWildGenerators) {
  auto as = artin_schreier_quadratic();
  auto eps = gen_general(as, 1, {}, 5);
  auto report = gm_verify_assoc_order_theorem(as, eps.delta);
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.index_over_group_ring, 1);

  auto sextic = flagship_sextic();
  auto gen = gen_tot_weak(sextic, 1, {});
  auto rep = gm_verify_assoc_order_theorem(sextic, gen.delta);
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.index_over_group_ring, 1);
}
