#include "hfold/families.hpp"

#include <cstdint>

#include <gtest/gtest.h>

#include "hfold/int_set.hpp"
#include "hfold/sumset.hpp"

using namespace hfold;

namespace {

TEST(Build, Literals) {
  EXPECT_EQ(build(FamilyId::p1(5, 2)), make_set({0, 1, 3, 4, 5}));
  EXPECT_EQ(build(FamilyId::p2(5, 2)), make_set({0, 1, 4, 5, 6}));
  EXPECT_EQ(build(FamilyId::p3(5, 2)), make_set({0, 1, 3, 5, 6}));
  EXPECT_EQ(build(FamilyId::p4(5, 1, 4)), make_set({0, 2, 3, 5, 6}));
  EXPECT_EQ(build(FamilyId::l2(2, 5)), make_set({0, 1, 3, 4, 5}));
  EXPECT_EQ(build(FamilyId::l3(2, 6)), make_set({0, 1, 4, 5, 6}));
}

TEST(Build, AlwaysNormalForm) {
  for (int64_t k = 5; k <= 9; ++k) {
    for (int64_t i = 1; i <= k; ++i) {
      EXPECT_TRUE(is_normal_form(build(FamilyId::p1(k, i))));
      EXPECT_TRUE(is_normal_form(build(FamilyId::p2(k, i))));
      if (i <= k - 1) {
        EXPECT_TRUE(is_normal_form(build(FamilyId::p3(k, i))));
      }
    }
  }
  EXPECT_TRUE(is_normal_form(build(FamilyId::l2(4, 9))));
  EXPECT_TRUE(is_normal_form(build(FamilyId::l3(4, 9))));
}

TEST(Validate, ParameterConstraints) {
  EXPECT_THROW(build(FamilyId::p1(3, 1)), BadParameters);
  EXPECT_THROW(build(FamilyId::p1(5, 0)), BadParameters);
  EXPECT_THROW(build(FamilyId::p1(5, 6)), BadParameters);
  EXPECT_THROW(build(FamilyId::p2(4, 1)), BadParameters);
  EXPECT_THROW(build(FamilyId::p3(5, 5)), BadParameters);
  EXPECT_THROW(build(FamilyId::p4(6, 3, 5)), BadParameters);  // j < i+3
  EXPECT_THROW(build(FamilyId::p4(6, 5, 8)), BadParameters);  // i > k-2
  EXPECT_THROW(build(FamilyId::p4(6, 2, 8)), BadParameters);  // j > k+1
  EXPECT_THROW(build(FamilyId::l2(1, 5)), BadParameters);
  EXPECT_THROW(build(FamilyId::l3(2, 4)), BadParameters);
}

TEST(PredictCardinality, Examples) {
  EXPECT_EQ(predict_cardinality(FamilyId::p1(5, 1), 2), 10);
  EXPECT_EQ(predict_cardinality(FamilyId::p2(5, 2), 2), 12);
  EXPECT_EQ(predict_cardinality(FamilyId::p3(5, 1), 2), 11);
  EXPECT_EQ(predict_cardinality(FamilyId::p4(6, 2, 5), 3), 22);
  EXPECT_EQ(predict_cardinality(FamilyId::l2(3, 7), 2), 15);
}

TEST(PredictCardinality, HConstraints) {
  EXPECT_THROW(predict_cardinality(FamilyId::l3(3, 8), 2), UnsupportedH);
  EXPECT_EQ(predict_cardinality(FamilyId::l3(3, 8), 3), 25);
  EXPECT_THROW(predict_cardinality(FamilyId::p1(5, 1), 1), UnsupportedH);
}

TEST(PredictInterval, OnlyGapFamilies) {
  EXPECT_EQ(predict_sumset_interval(FamilyId::l2(3, 7), 2), (Interval{0, 14}));
  EXPECT_EQ(predict_sumset_interval(FamilyId::l3(3, 8), 3), (Interval{0, 24}));
  EXPECT_THROW(predict_sumset_interval(FamilyId::l3(3, 8), 2), UnsupportedH);
  EXPECT_THROW(predict_sumset_interval(FamilyId::p1(5, 2), 2), UnsupportedFamily);
}

// Property: every closed-form value equals the engine count of the built
// set, across the whole parameter grid that fits a desk test.
TEST(PredictCardinality, MatchesEngineExhaustively) {
  for (int64_t h = 2; h <= 5; ++h) {
    for (int64_t k = 4; k <= 10; ++k)
      for (int64_t i = 1; i <= k; ++i)
        ASSERT_EQ(predict_cardinality(FamilyId::p1(k, i), h),
                  h_fold_cardinality(build(FamilyId::p1(k, i)), h))
            << "P1 k=" << k << " i=" << i << " h=" << h;
    for (int64_t k = 5; k <= 10; ++k) {
      for (int64_t i = 1; i <= k; ++i)
        ASSERT_EQ(predict_cardinality(FamilyId::p2(k, i), h),
                  h_fold_cardinality(build(FamilyId::p2(k, i)), h))
            << "P2 k=" << k << " i=" << i << " h=" << h;
      for (int64_t i = 1; i <= k - 1; ++i)
        ASSERT_EQ(predict_cardinality(FamilyId::p3(k, i), h),
                  h_fold_cardinality(build(FamilyId::p3(k, i)), h))
            << "P3 k=" << k << " i=" << i << " h=" << h;
      for (int64_t i = 1; i <= k - 2; ++i)
        for (int64_t j = i + 3; j <= k + 1; ++j)
          ASSERT_EQ(predict_cardinality(FamilyId::p4(k, i, j), h),
                    h_fold_cardinality(build(FamilyId::p4(k, i, j)), h))
              << "P4 k=" << k << " i=" << i << " j=" << j << " h=" << h;
    }
  }
}

// Property: the L2/L3 sumsets really are the full interval [0, hj].
TEST(PredictInterval, MatchesEngineExhaustively) {
  for (int64_t i = 2; i <= 6; ++i) {
    for (int64_t j = i + 2; j <= i + 7; ++j)
      for (int64_t h = 2; h <= 5; ++h) {
        const SumsetResult r = h_fold(build(FamilyId::l2(i, j)), h);
        ASSERT_EQ(r.cardinality, h * j + 1) << "L2 i=" << i << " j=" << j << " h=" << h;
        ASSERT_EQ(r.elements.min(), 0);
        ASSERT_EQ(r.elements.max(), h * j);
      }
    for (int64_t j = i + 3; j <= i + 7; ++j)
      for (int64_t h = 3; h <= 5; ++h) {
        const SumsetResult r = h_fold(build(FamilyId::l3(i, j)), h);
        ASSERT_EQ(r.cardinality, h * j + 1) << "L3 i=" << i << " j=" << j << " h=" << h;
        ASSERT_EQ(r.elements.min(), 0);
        ASSERT_EQ(r.elements.max(), h * j);
      }
  }
}

// The same set can carry several family labels; the formulas must agree.
TEST(Families, OverlapsAreCoherent) {
  for (int64_t k = 5; k <= 9; ++k) {
    for (int64_t i = 2; i <= k - 2; ++i) {
      EXPECT_EQ(build(FamilyId::p1(k, i)), build(FamilyId::l2(i, k)));
      EXPECT_EQ(build(FamilyId::p2(k, i)), build(FamilyId::l3(i, k + 1)));
      for (int64_t h = 3; h <= 5; ++h) {
        EXPECT_EQ(predict_cardinality(FamilyId::p2(k, i), h),
                  predict_cardinality(FamilyId::l3(i, k + 1), h));
      }
    }
    // Removing {k-1, k+1} from [0, k+1] leaves [0, k] minus {k-1}.
    EXPECT_EQ(build(FamilyId::p3(k, k - 1)), build(FamilyId::p1(k, k - 1)));
    for (int64_t h = 2; h <= 5; ++h)
      EXPECT_EQ(predict_cardinality(FamilyId::p3(k, k - 1), h),
                predict_cardinality(FamilyId::p1(k, k - 1), h));
  }
}

// Reflection swaps i with k-i (and hole pairs end-for-end) without changing
// cardinalities.
TEST(Families, ReflectionDuality) {
  for (int64_t k = 5; k <= 9; ++k) {
    for (int64_t i = 1; i <= k - 1; ++i) {
      EXPECT_EQ(reflect(build(FamilyId::p1(k, i))), build(FamilyId::p1(k, k - i)));
      for (int64_t h = 2; h <= 4; ++h)
        EXPECT_EQ(predict_cardinality(FamilyId::p1(k, i), h),
                  predict_cardinality(FamilyId::p1(k, k - i), h));
    }
    for (int64_t i = 1; i <= k - 1; ++i) {
      EXPECT_EQ(reflect(build(FamilyId::p2(k, i))), build(FamilyId::p2(k, k - i)));
      for (int64_t h = 2; h <= 4; ++h)
        EXPECT_EQ(predict_cardinality(FamilyId::p2(k, i), h),
                  predict_cardinality(FamilyId::p2(k, k - i), h));
    }
    for (int64_t i = 1; i <= k - 2; ++i)
      for (int64_t j = i + 3; j <= k; ++j) {
        EXPECT_EQ(reflect(build(FamilyId::p4(k, i, j))),
                  build(FamilyId::p4(k, k + 1 - j, k + 1 - i)));
        for (int64_t h = 2; h <= 4; ++h)
          EXPECT_EQ(predict_cardinality(FamilyId::p4(k, i, j), h),
                    predict_cardinality(FamilyId::p4(k, k + 1 - j, k + 1 - i), h));
      }
  }
}

TEST(FamilyId, Rendering) {
  EXPECT_EQ(to_string(FamilyId::p4(6, 2, 5)), "P4{k=6, i=2, j=5}");
  EXPECT_EQ(to_string(FamilyId::l2(3, 7)), "L2{i=3, j=7}");
}

}  // namespace
