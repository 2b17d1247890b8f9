#include "weakram/finite_field.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace weakram;

namespace {

// Independent normality oracle: x is normal for F_{q^ext}/F_q exactly when
// the F_q-span of its Frobenius orbit has q^ext distinct elements.  This
// enumerates every linear combination instead of touching the matrix path.
bool normal_by_span(const FFPtr& F, const FFElem& x, int ext, int base) {
  std::vector<FFElem> conj;
  FFElem y = x;
  for (int k = 0; k < ext; ++k) {
    conj.push_back(y);
    y = F->frobenius(y, base);
  }
  FFPtr S = F->subfield(base);
  std::int64_t q = S->card();
  std::int64_t total = 1;
  for (int k = 0; k < ext; ++k) total *= q;
  std::set<std::uint64_t> seen;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx;
    FFElem sum = F->zero();
    for (int k = 0; k < ext; ++k) {
      FFElem lambda = S->element(static_cast<std::uint64_t>(rest % q));
      rest /= q;
      sum = sum + F->from_subfield(lambda) * conj[k];
    }
    seen.insert(F->index_of(sum));
  }
  return static_cast<std::int64_t>(seen.size()) == total;
}

}  // namespace

TEST(FiniteField, DefaultModuliAreLexSmallest) {
  EXPECT_EQ(FiniteField::make(2, 2)->modulus(),
            (std::vector<std::int32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::make(2, 3)->modulus(),
            (std::vector<std::int32_t>{1, 0, 1, 1}));
  EXPECT_EQ(FiniteField::make(3, 2)->modulus(),
            (std::vector<std::int32_t>{1, 0, 1}));
  EXPECT_EQ(FiniteField::make(3, 3)->modulus(),
            (std::vector<std::int32_t>{1, 0, 2, 1}));
}

TEST(FiniteField, PrimeFieldArithmetic) {
  auto F3 = FiniteField::make(3, 1);
  EXPECT_EQ(F3->inv(F3->from_int(2)), F3->from_int(2));
  EXPECT_EQ(F3->from_int(2) + F3->from_int(2), F3->from_int(1));
  EXPECT_EQ(F3->from_int(-1), F3->from_int(2));
  EXPECT_THROW(F3->inv(F3->zero()), division_by_zero);
}

TEST(FiniteField, QuarticRelationInF4) {
  auto F4 = FiniteField::make(2, 2);
  FFElem w = F4->gen();
  EXPECT_EQ(w * (w + F4->one()), F4->one());
  EXPECT_EQ(w * w * w, F4->one());
}

TEST(FiniteField, FieldAxiomsExhaustive) {
  for (auto [p, f] : {std::pair<long, int>{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    auto F = FiniteField::make(p, f);
    std::int64_t q = F->card();
    for (std::int64_t i = 0; i < q; ++i) {
      FFElem a = F->element(static_cast<std::uint64_t>(i));
      if (!a.is_zero()) {
        EXPECT_EQ(a * F->inv(a), F->one());
        EXPECT_EQ(F->pow(a, q - 1), F->one());
      }
      for (std::int64_t j = 0; j < q; ++j) {
        FFElem b = F->element(static_cast<std::uint64_t>(j));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) - b, a);
        // Frobenius is additive and multiplicative.
        EXPECT_EQ(F->frobenius(a * b), F->frobenius(a) * F->frobenius(b));
        EXPECT_EQ(F->frobenius(a + b), F->frobenius(a) + F->frobenius(b));
      }
    }
  }
}

TEST(FiniteField, FrobeniusIsPthPower) {
  auto F = FiniteField::make(3, 3);
  for (std::int64_t i = 0; i < F->card(); ++i) {
    FFElem a = F->element(static_cast<std::uint64_t>(i));
    EXPECT_EQ(F->frobenius(a), F->pow(a, 3));
    EXPECT_EQ(F->frobenius(a, 3), a);
  }
}

TEST(FiniteField, TraceValues) {
  auto F4 = FiniteField::make(2, 2);
  EXPECT_EQ(F4->trace(F4->gen()), F4->one());
  auto F9 = FiniteField::make(3, 2);
  EXPECT_EQ(F9->trace(F9->one()), F9->from_int(2));
  EXPECT_EQ(F9->trace(F9->gen()), F9->zero());
  auto F8 = FiniteField::make(2, 3);
  EXPECT_EQ(F8->trace(F8->gen()), F8->one());
}

TEST(FiniteField, TraceLandsInSubfieldAndIsTransitive) {
  auto F = FiniteField::make(2, 6);
  for (std::uint64_t i = 0; i < 64; ++i) {
    FFElem a = F->element(i);
    FFElem t2 = F->trace(a, 2);
    EXPECT_TRUE(F->in_subfield(t2, 2));
    // Tower formula: Tr_{F/F2} = Tr_{F4/F2} after Tr_{F/F4}.
    FFElem down = F->to_subfield(t2, 2);
    auto F4 = F->subfield(2);
    EXPECT_EQ(F4->to_subfield(F4->trace(down, 1), 1),
              F->to_subfield(F->trace(a, 1), 1));
  }
}

TEST(FiniteField, SubfieldCoordsRoundTrip) {
  auto F = FiniteField::make(3, 4);
  for (std::uint64_t i = 0; i < 81; ++i) {
    FFElem a = F->element(i);
    auto coords = F->subfield_coords(a, 2);
    ASSERT_EQ(coords.size(), 2u);
    EXPECT_EQ(F->from_subfield_coords(coords, 2), a);
  }
}

TEST(FiniteField, NormalityMatchesSpanOracleExhaustive) {
  struct Case {
    long p;
    int ext, base;
  };
  for (auto cse : {Case{2, 2, 1}, Case{2, 3, 1}, Case{3, 2, 1}, Case{2, 2, 2},
                   Case{3, 3, 1}}) {
    auto F = FiniteField::make(cse.p, cse.ext * cse.base);
    for (std::int64_t i = 0; i < F->card(); ++i) {
      FFElem x = F->element(static_cast<std::uint64_t>(i));
      EXPECT_EQ(F->is_normal(x, cse.ext, cse.base),
                normal_by_span(F, x, cse.ext, cse.base))
          << "p=" << cse.p << " ext=" << cse.ext << " base=" << cse.base
          << " index=" << i;
    }
  }
}

TEST(FiniteField, NormalEquivalentToNonzeroTraceInCharDegree) {
  // For extensions whose degree is a power of the characteristic, an element
  // is normal exactly when its trace is nonzero.  Exhaustive for F_4/F_2
  // (degree 2 = p) and F_27/F_3 (degree 3 = p).
  for (auto [p, f] : {std::pair<long, int>{2, 2}, {3, 3}}) {
    auto F = FiniteField::make(p, f);
    for (std::int64_t i = 0; i < F->card(); ++i) {
      FFElem x = F->element(static_cast<std::uint64_t>(i));
      EXPECT_EQ(F->is_normal(x, f, 1), !F->trace(x).is_zero());
    }
  }
}

TEST(FiniteField, TraceTestFailsOutsideCharDegree) {
  // F_9/F_3 has degree 2, not a power of 3: the element 1 has trace 2 != 0
  // yet its conjugates {1, 1} are dependent.
  auto F9 = FiniteField::make(3, 2);
  EXPECT_FALSE(F9->trace(F9->one()).is_zero());
  EXPECT_FALSE(F9->is_normal(F9->one(), 2, 1));
}

TEST(FiniteField, NormalBasisSearchIsSeededAndDeterministic) {
  auto F = FiniteField::make(3, 4);
  FFElem a = F->normal_basis_element(2, 2, 7);
  FFElem b = F->normal_basis_element(2, 2, 7);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(F->is_normal(a, 2, 2));
  FFElem c = F->normal_basis_element(2, 2, 8);
  EXPECT_TRUE(F->is_normal(c, 2, 2));
  // Degree-p tower: the returned element must have nonzero trace.
  auto F27 = FiniteField::make(3, 3);
  FFElem d = F27->normal_basis_element(3, 1, 0);
  EXPECT_FALSE(F27->trace(d).is_zero());
}

TEST(FiniteField, DegreeAndFieldChecks) {
  auto F = FiniteField::make(3, 2);
  auto G = FiniteField::make(3, 3);
  EXPECT_THROW(F->add(F->one(), G->one()), field_mismatch);
  EXPECT_THROW(F->trace(F->one(), 4), invalid_degree);
  EXPECT_THROW(F->is_normal(F->one(), 3, 1), invalid_degree);
  EXPECT_THROW(FiniteField::make_with_modulus(2, {1, 0, 1}),
               reducible_polynomial);
}

TEST(FiniteField, ToStringReadable) {
  auto F9 = FiniteField::make(3, 2);
  EXPECT_EQ(F9->to_string(F9->zero()), "0");
  EXPECT_EQ(F9->to_string(F9->gen() * F9->from_int(2) + F9->one()), "2*w + 1");
}
