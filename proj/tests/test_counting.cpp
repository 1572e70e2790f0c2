#include "dwcount/counting.hpp"
#include "dwcount/oracle.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace dwcount {
namespace {

using testing::mo;

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(DegreeCount, Examples) {
  for (const auto& manifold : testing::random_corpus(10, 8)) {
    for (std::int64_t k : {-3, 0, 1, 7}) EXPECT_EQ(degree_count(manifold, 1, k), 1);
  }
  EXPECT_EQ(degree_count(mo(0, {{1, 2}}), 2, 0), 1);
  EXPECT_EQ(degree_count(mo(0, {{1, 2}}), 2, 1), 1);
  EXPECT_EQ(degree_count(mo(1), 2, 0), 8);
  EXPECT_EQ(degree_count(mo(1), 2, 1), 0);
  EXPECT_EQ(degree_count(mo(0, {{1, 1}}), 3, 0), 1);
  EXPECT_EQ(degree_count(mo(0, {{1, 1}}), 3, 1), 0);
  EXPECT_EQ(degree_count(mo(0, {{1, 1}}), 3, 2), 0);
}

TEST(DegreeCountTable, Examples) {
  EXPECT_EQ(degree_count_table(mo(0, {{1, 2}}), 2).counts, ints({1, 1}));
  EXPECT_EQ(degree_count_table(mo(1), 2).counts, ints({8, 0}));
  EXPECT_EQ(degree_count_table(mo(0), 3).counts, ints({3, 0, 0}));
}

// Values below were produced by a separate 40-digit floating-point
// evaluation of the Fourier-inverted DW sum and rounded.
TEST(DegreeCountTable, FrozenReferenceValues) {
  EXPECT_EQ(degree_count_table(mo(0, {{2, 1}, {3, 1}, {3, 1}}), 3).counts, ints({1, 0, 2}));
  EXPECT_EQ(degree_count_table(mo(0, {{3, 1}, {3, 1}, {3, 1}}), 3).counts, ints({3, 0, 6}));
  EXPECT_EQ(degree_count_table(mo(0, {{5, 1}, {5, 2}}), 5).counts, ints({1, 2, 0, 0, 2}));
  EXPECT_EQ(degree_count_table(mo(1, {{2, 3}, {4, 1}}), 6).counts, ints({36, 0, 0, 36, 0, 0}));
  EXPECT_EQ(degree_count_table(mo(0, {{4, 1}, {4, 1}}), 4).counts, ints({2, 0, 2, 0}));
  EXPECT_EQ(degree_count_table(mo(2, {{2, 1}}), 3).counts, ints({81, 0, 0}));

  const auto dw = dw_all(mo(0, {{2, 1}, {3, 1}, {3, 1}}), 3);
  const auto z1 = approx_complex(dw.values[1]);
  EXPECT_NEAR(z1.real(), 0.0, 1e-12);
  EXPECT_NEAR(z1.imag(), -1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(approx_complex(dw_all(mo(0, {{5, 1}, {5, 2}}), 5).values[1]).real(), 1.0 / std::sqrt(5.0), 1e-12);
}

TEST(DegreeCount, PeriodicInDegree) {
  for (const auto& manifold : testing::random_corpus(15, 12)) {
    for (std::int64_t m = 2; m <= 6; ++m) {
      const DwVector dw = dw_all(manifold, m);
      for (std::int64_t k = 0; k < m; ++k) {
        const BigInt base = degree_count(dw, k);
        EXPECT_EQ(degree_count(dw, k + m), base);
        EXPECT_EQ(degree_count(dw, k - 5 * m), base);
        EXPECT_EQ(degree_count(dw, k + 1000003 * m), base);
      }
    }
  }
}

TEST(DegreeCount, IntegralityViolationOnBadInput) {
  DwVector dw;
  dw.m = 3;
  for (int l = 0; l < 3; ++l) dw.values.push_back(cyclo_root_power(9, 1));
  try {
    degree_count(dw, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IntegralityViolation);
  }
  dw.values.assign(3, CycloValue::constant(9, -1));
  try {
    degree_count(dw, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeCount);
  }
}

TEST(FourierForward, Examples) {
  DegreeCountTable t{2, ints({1, 1})};
  auto dw = fourier_forward(t);
  EXPECT_EQ(extract_integer(dw.values[0]), 1);
  EXPECT_EQ(extract_integer(dw.values[1]), 0);

  t = {5, ints({7, 0, 0, 0, 0})};
  for (const auto& z : fourier_forward(t).values) {
    EXPECT_EQ(reduce_canonical(z), reduce_canonical(CycloValue::constant(25, 7, 5)));
  }

  t = {1, ints({1})};
  EXPECT_EQ(extract_integer(fourier_forward(t).values[0]), 1);
}

TEST(FourierForward, InvertsDegreeCountTable) {
  for (const auto& manifold : testing::random_corpus(25, 13)) {
    for (std::int64_t m = 1; m <= 8; ++m) {
      const DwVector dw = dw_all(manifold, m);
      const DwVector back = fourier_forward(degree_count_table(dw));
      for (std::int64_t l = 0; l < m; ++l) {
        EXPECT_EQ(reduce_canonical(back.values[l]), reduce_canonical(dw.values[l]));
      }
    }
  }
}

TEST(DegreeCountTable, NoExceptionalFibersClosedForm) {
  for (std::int64_t g = 1; g <= 3; ++g) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      std::vector<BigInt> expected(static_cast<std::size_t>(m), BigInt(0));
      expected[0] = big_pow(BigInt(m), static_cast<unsigned>(2 * g + 1));
      EXPECT_EQ(degree_count_table(mo(g), m).counts, expected);
    }
  }
}

TEST(VerifyConsistency, Examples) {
  auto report = verify_consistency(mo(0, {{1, 2}}), 2);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.hom_count, 2);
  EXPECT_EQ(report.sum_of_counts, 2);

  report = verify_consistency(mo(1), 3);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.hom_count, 27);
  EXPECT_TRUE(report.trivial_class_check);

  report = verify_consistency(mo(2, {{3, 1}, {5, -2}}), 1);
  EXPECT_TRUE(report.all_passed());
}

TEST(VerifyConsistency, ReportsInjectedFaults) {
  const auto manifold = mo(0, {{3, 1}, {3, 1}, {3, 1}});
  DwVector dw = dw_all(manifold, 3);
  const BigInt homs = count_homs(manifold, 3);
  ASSERT_TRUE(verify_consistency(dw, homs).all_passed());

  // Wrong #hom: total and trivial-class checks fail.
  auto report = verify_consistency(dw, homs + 1);
  EXPECT_FALSE(report.total_check);
  EXPECT_FALSE(report.trivial_class_check);
  EXPECT_TRUE(report.conjugation_symmetry);
  EXPECT_FALSE(report.all_passed());

  // Breaking conjugation symmetry makes counts non-real as well.
  auto broken = dw;
  broken.values[1] = cyclo_add(broken.values[1], cyclo_root_power(9, 1));
  report = verify_consistency(broken, homs);
  EXPECT_FALSE(report.conjugation_symmetry);
  EXPECT_FALSE(report.nonnegativity);
  EXPECT_FALSE(report.all_passed());
  EXPECT_FALSE(report.failures.empty());
}

TEST(VerifyConsistency, CorpusSweep) {
  for (const auto& manifold : testing::random_corpus(30, 77)) {
    for (std::int64_t m = 1; m <= 8; ++m) {
      const auto report = verify_consistency(manifold, m);
      EXPECT_TRUE(report.all_passed()) << render_seifert(manifold) << " m=" << m << ": "
                                       << (report.failures.empty() ? "" : report.failures.front());
    }
  }
}

}  // namespace
}  // namespace dwcount
