#include "dwcount/oracle.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

namespace dwcount {
namespace {

using testing::mo;

TEST(BruteCountHoms, Examples) {
  EXPECT_EQ(brute_count_homs(mo(0, {{1, 2}}), 2), 2);
  EXPECT_EQ(brute_count_homs(mo(1), 2), 8);
  for (const auto& manifold : testing::random_corpus(10, 1)) EXPECT_EQ(brute_count_homs(manifold, 1), 1);
}

TEST(BruteCountHoms, RelationCheck) {
  const auto manifold = mo(0, {{1, 2}});
  EXPECT_TRUE(satisfies_relations(manifold, {{0}, 0}, 2));
  EXPECT_TRUE(satisfies_relations(manifold, {{0}, 1}, 2));
  EXPECT_FALSE(satisfies_relations(manifold, {{1}, 0}, 2));
  EXPECT_FALSE(satisfies_relations(manifold, {{1}, 1}, 2));
}

TEST(BruteCountHoms, WorkLimit) {
  OracleBudget tight;
  tight.tuple_cap = 100;
  try {
    brute_count_homs(mo(0, {{2, 1}, {2, 1}, {2, 1}}), 8, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WorkLimitExceeded);
  }
}

TEST(ApproxDwFloat, Examples) {
  const auto third = approx_dw_float(mo(0, {{1, 1}}), 3, 1);
  EXPECT_NEAR(third.real(), 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(third.imag(), 0.0, 1e-9);
  const auto four = approx_dw_float(mo(1), 2, 1);
  EXPECT_NEAR(four.real(), 4.0, 1e-12);
  EXPECT_NEAR(four.imag(), 0.0, 1e-12);
  const auto one = approx_dw_float(mo(2, {{3, 1}}), 1, 0);
  EXPECT_NEAR(one.real(), 1.0, 1e-12);
}

TEST(CrossValidate, Examples) {
  for (auto [manifold, m] : {std::pair{mo(0, {{3, 1}, {5, 2}}), std::int64_t{4}},
                             std::pair{mo(2, {{2, 1}}), std::int64_t{3}},
                             std::pair{mo(1, {{4, 3}, {2, -1}}), std::int64_t{1}}}) {
    const auto report = cross_validate(manifold, m);
    EXPECT_TRUE(report.all_passed()) << render_seifert(manifold);
    ASSERT_TRUE(report.brute_force_homs.has_value());
    EXPECT_TRUE(*report.brute_force_homs);
    ASSERT_TRUE(report.float_agreement.has_value());
    EXPECT_TRUE(*report.float_agreement);
  }
}

TEST(CrossValidate, DetectsFloatDisagreement) {
  const auto manifold = mo(0, {{2, 1}, {3, 1}});
  DwVector dw = dw_all(manifold, 4);
  dw.values[2] = cyclo_add(dw.values[2], CycloValue::constant(16, 1, 1000));
  const auto report = cross_validate(manifold, dw, count_homs(manifold, 4));
  EXPECT_FALSE(*report.float_agreement);
  EXPECT_FALSE(report.all_passed());
}

TEST(CrossValidate, CorpusSweep) {
  for (const auto& manifold : testing::random_corpus(40, 555, {2, 4, 6, 6})) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      const auto report = cross_validate(manifold, m);
      EXPECT_TRUE(report.all_passed()) << render_seifert(manifold) << " m=" << m;
    }
  }
}

}  // namespace
}  // namespace dwcount
