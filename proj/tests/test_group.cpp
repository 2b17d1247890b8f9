#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "weakram/errors.hpp"
#include "weakram/group.hpp"

namespace {

using weakram::FiniteGroup;
using weakram::SplitData;

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Composition table for a list of one-line permutations, (a*b)(x) = a(b(x)).
std::vector<std::vector<int>> perm_table(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(perms[a].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
      for (int k = 0; k < n; ++k)
        if (perms[k] == c) t[a][b] = k;
    }
  return t;
}

// 0:id 1:(01) 2:(02) 3:(12) 4:(012) 5:(021)
FiniteGroup make_s3() {
  return FiniteGroup(perm_table(
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(GroupTable, CyclicBasics) {
  FiniteGroup g(cyclic_table(6));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.identity(), 0);
  EXPECT_EQ(g.inverse(2), 4);
  EXPECT_EQ(g.op(4, 5), 3);
  EXPECT_EQ(g.pow(1, 9), 3);
  EXPECT_EQ(g.pow(1, -1), 5);
  EXPECT_EQ(g.element_order(2), 3);
  EXPECT_EQ(g.element_order(3), 2);
  EXPECT_TRUE(g.is_abelian());
}

TEST(GroupTable, RejectsMalformedTables) {
  auto t = cyclic_table(4);
  t[1][1] = 1;
  EXPECT_THROW(FiniteGroup{t}, weakram::theorem_violation);
  auto bad = [] { return FiniteGroup({{0, 1}, {1, 9}}); };
  EXPECT_THROW(bad(), weakram::dimension_mismatch);
}

TEST(GroupTable, SymmetricGroupStructure) {
  FiniteGroup g = make_s3();
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g.element_order(1), 2);
  EXPECT_EQ(g.element_order(4), 3);
  EXPECT_EQ(g.closure({1}), (std::vector<int>{0, 1}));
  EXPECT_EQ(g.closure({4}), (std::vector<int>{0, 4, 5}));
  EXPECT_EQ(g.closure({1, 2}).size(), 6u);
  EXPECT_TRUE(g.is_subgroup({0, 4, 5}));
  EXPECT_TRUE(g.is_normal({0, 4, 5}));
  EXPECT_FALSE(g.is_normal({0, 1}));
  EXPECT_EQ(g.normalizer({0, 1}), (std::vector<int>{0, 1}));
  EXPECT_EQ(g.normalizer({0, 4, 5}).size(), 6u);
  EXPECT_EQ(g.set_product({0, 4, 5}, {0, 1}).size(), 6u);
  EXPECT_EQ(FiniteGroup::intersect({0, 1}, {0, 4, 5}), (std::vector<int>{0}));
}

TEST(GroupTable, SylowSubgroupExtraction) {
  FiniteGroup s3 = make_s3();
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(weakram::grp_sylow_p(s3, all, 3), (std::vector<int>{0, 4, 5}));
  EXPECT_THROW(weakram::grp_sylow_p(s3, all, 2), weakram::not_normal_sylow);
  FiniteGroup c6(cyclic_table(6));
  EXPECT_EQ(weakram::grp_sylow_p(c6, {0, 1, 2, 3, 4, 5}, 2), (std::vector<int>{0, 3}));
}

TEST(GroupTable, ComplementSearchIsCanonical) {
  FiniteGroup s3 = make_s3();
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(weakram::grp_complement(s3, all, {0, 4, 5}), (std::vector<int>{0, 1}));
  FiniteGroup v4(perm_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  EXPECT_EQ(weakram::grp_complement(v4, {0, 1, 2, 3}, {0, 1}), (std::vector<int>{0, 2}));
  FiniteGroup c4(cyclic_table(4));
  EXPECT_THROW(weakram::grp_complement(c4, {0, 1, 2, 3}, {0, 2}), weakram::no_complement);
}

TEST(GroupTable, FrobeniusLiftLandsInNormalizer) {
  FiniteGroup s3 = make_s3();
  EXPECT_EQ(weakram::grp_frobenius_lift_in_normalizer(s3, {0, 4, 5}, {0}, 1), 1);
  // lift 1=(01) against C = <(12)>: (01) itself fails, 5^{-1}*(01) must fix C
  std::vector<int> c{0, 3};
  int tau = weakram::grp_frobenius_lift_in_normalizer(s3, {0, 4, 5}, c, 1);
  EXPECT_EQ(s3.conjugate_subgroup(c, tau), c);
}

TEST(GroupTable, DoublySplitSymmetricGroup) {
  FiniteGroup s3 = make_s3();
  SplitData d = weakram::grp_doubly_split(s3, {0, 4, 5}, 2, 3);
  EXPECT_EQ(d.W, (std::vector<int>{0, 4, 5}));
  EXPECT_EQ(d.C, (std::vector<int>{0}));
  EXPECT_EQ(d.U.size(), 2u);
  EXPECT_EQ(d.T, d.U);
  EXPECT_EQ(d.S.size(), 6u);
  EXPECT_EQ(s3.pow(d.tau, 2), 0);
}

TEST(GroupTable, DoublySplitCyclicMixedOrder) {
  FiniteGroup c6(cyclic_table(6));
  SplitData d = weakram::grp_doubly_split(c6, {0, 2, 4}, 3, 3);
  EXPECT_EQ(d.W, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(d.C, (std::vector<int>{0}));
  EXPECT_EQ(d.tau, 3);
  EXPECT_EQ(d.U, (std::vector<int>{0, 3}));
  EXPECT_EQ(d.S.size(), 6u);
}

TEST(GroupTable, DoublySplitWhollyInert) {
  FiniteGroup v4(perm_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  SplitData d = weakram::grp_doubly_split(v4, {0, 1, 2, 3}, 0, 2);
  EXPECT_EQ(d.W.size(), 4u);
  EXPECT_EQ(d.U, (std::vector<int>{0}));
  EXPECT_EQ(d.T, (std::vector<int>{0}));
}

TEST(GroupTable, DoublySplitRejectsNonSplitCyclic) {
  FiniteGroup c4(cyclic_table(4));
  EXPECT_THROW(weakram::grp_doubly_split(c4, {0, 2}, 1, 2), weakram::not_doubly_split);
}

}  // namespace
