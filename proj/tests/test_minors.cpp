#include "totpos/minors.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "totpos/transfer.hpp"

namespace totpos {
namespace {

RationalMatrix rational(std::vector<std::vector<long>> rows) {
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(rational({{1, 2}, {3, 4}})), -2);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(determinant(RationalMatrix::Identity(n, n)), 1);
    EXPECT_EQ(determinant(IntegerMatrix::Identity(n, n)), 1);
  }
  EXPECT_EQ(determinant(RationalMatrix(0, 0)), 1);
  EXPECT_THROW(determinant(RationalMatrix::Zero(2, 3)), std::invalid_argument);
  // zero leading pivot forces a row swap
  EXPECT_EQ(determinant(rational({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(rational({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), -1);
  EXPECT_EQ(determinant(rational({{1, 2}, {2, 4}})), 0);
}

TEST(Determinant, SubmatrixOfW8) {
  const IntegerMatrix w8 = build_w(8).entries;
  const std::vector<int> rows{0, 1, 2}, cols{2, 3, 4};
  const Rational expected = oracle::cofactor_determinant(w8(rows, cols).cast<Rational>());
  EXPECT_EQ(Rational(determinant(w8(rows, cols))), expected);
  // rows {28,56,70},{7,21,35},{1,6,15} of W_8
  EXPECT_EQ(expected, 490);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6), order(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(order(rng));
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
    }
    ASSERT_EQ(determinant(m), oracle::cofactor_determinant(m)) << "trial " << trial;
  }
}

TEST(Determinant, IntegerPathStaysIntegral) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix m(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) m(i, j) = num(rng);
    }
    ASSERT_EQ(Rational(determinant(m)), oracle::cofactor_determinant(m.cast<Rational>()));
  }
}

TEST(Combinations, LexicographicAndCounted) {
  const auto c = combinations(4, 2);
  EXPECT_EQ(c, (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(Integer(combinations(n, k).size()), binomial(n, k));
    }
  }
  EXPECT_TRUE(combinations(2, 3).empty());
}

TEST(MinorIterator, OrderOneIsRowMajorEntries) {
  const RationalMatrix w4 = build_w(4).entries.cast<Rational>();
  const auto minors = minors_of_order(w4, 1);
  ASSERT_EQ(minors.size(), 8u);
  for (std::size_t t = 0; t < minors.size(); ++t) {
    EXPECT_EQ(minors[t].rows, std::vector<int>{static_cast<int>(t / 4)});
    EXPECT_EQ(minors[t].cols, std::vector<int>{static_cast<int>(t % 4)});
    EXPECT_EQ(minors[t].value, w4(t / 4, t % 4));
  }
}

TEST(MinorIterator, OrderTwoOnW4) {
  const auto minors = minors_of_order(build_w(4).entries.cast<Rational>(), 2);
  ASSERT_EQ(minors.size(), 6u);
  // [[1,4,6,4],[0,1,3,2]]: columns (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  const std::vector<long> expected{1, 3, 2, 6, 4, 0};
  for (std::size_t t = 0; t < minors.size(); ++t) {
    EXPECT_EQ(minors[t].value, expected[t]);
    EXPECT_GE(minors[t].value, 0);
  }
}

TEST(MinorIterator, CountsAndRange) {
  const RationalMatrix m = build_m(7).entries.cast<Rational>();
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(Integer(minors_of_order(m, k).size()), binomial(4, k) * binomial(7, k));
  }
  EXPECT_THROW(minors_of_order(m, 0), std::out_of_range);
  EXPECT_THROW(minors_of_order(m, 5), std::out_of_range);
}

TEST(Tnn, TransferMatrixThree) {
  const auto report = is_totally_nonnegative(build_m(3).entries);
  EXPECT_TRUE(report.is_tnn);
  EXPECT_FALSE(report.witness.has_value());
  EXPECT_EQ(report.minors_checked, 6u + 3u);
  EXPECT_EQ(report.min_minor, 0);  // columns {1,2}: 6*2 - 4*3
}

TEST(Tnn, CounterExample) {
  const auto report = is_totally_nonnegative(rational({{1, 2}, {3, 4}}));
  EXPECT_FALSE(report.is_tnn);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->rows, (std::vector<int>{0, 1}));
  EXPECT_EQ(report.witness->cols, (std::vector<int>{0, 1}));
  EXPECT_EQ(report.witness->value, -2);
  EXPECT_EQ(report.min_minor, -2);
  EXPECT_EQ(report.minors_checked, 5u);
}

TEST(Tnn, FirstNegativeIsLexicographic) {
  // negative entries at (1,0) and (0,2); order 1 scans row 0 first
  const auto report = is_totally_nonnegative(rational({{1, 1, -1}, {-3, 1, 1}}));
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->rows, std::vector<int>{0});
  EXPECT_EQ(report.witness->cols, std::vector<int>{2});
  EXPECT_EQ(report.min_minor, -3);
}

TEST(Tnn, RationalEntries) {
  RationalMatrix m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5);
  const auto report = is_totally_nonnegative(m);
  EXPECT_TRUE(report.is_tnn);
  EXPECT_EQ(report.min_minor, Rational(1, 60));
  m(1, 1) = Rational(1, 7);
  const auto bad = is_totally_nonnegative(m);
  EXPECT_FALSE(bad.is_tnn);
  EXPECT_EQ(bad.witness->value, Rational(1, 14) - Rational(1, 12));
}

TEST(Tnn, MaxOrderAndErrors) {
  const auto report = is_totally_nonnegative(rational({{1, 2}, {3, 4}}), ScanOptions{1, 1});
  EXPECT_TRUE(report.is_tnn);
  EXPECT_EQ(report.minors_checked, 4u);
  EXPECT_THROW(is_totally_nonnegative(RationalMatrix(0, 0)), std::invalid_argument);
  EXPECT_THROW(is_totally_nonnegative(rational({{1}}), ScanOptions{0, 1}), std::invalid_argument);
}

TEST(Tnn, TransferMatricesUpToNine) {
  for (int d = 1; d <= 9; ++d) {
    EXPECT_TRUE(is_totally_nonnegative(build_m(d).entries).is_tnn) << "d=" << d;
    EXPECT_TRUE(is_totally_nonnegative(build_w(d + 1).entries).is_tnn) << "n=" << d + 1;
  }
}

TEST(Tnn, ReportIndependentOfWorkerCount) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-3, 9);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix m(4, 5);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 5; ++j) m(i, j) = num(rng);
    }
    const auto one = is_totally_nonnegative(m, ScanOptions{std::nullopt, 1});
    for (unsigned jobs : {2u, 3u, 8u, 64u}) {
      const auto many = is_totally_nonnegative(m, ScanOptions{std::nullopt, jobs});
      ASSERT_EQ(many.is_tnn, one.is_tnn);
      ASSERT_EQ(many.minors_checked, one.minors_checked);
      ASSERT_EQ(many.min_minor, one.min_minor);
      ASSERT_EQ(many.witness, one.witness);
    }
  }
}

TEST(Tnn, SubmatrixInheritsTotalNonnegativity) {
  for (int n = 2; n <= 9; ++n) {
    const auto w = build_w(n);
    const auto m = strip_leading_column(w);
    const auto wr = is_totally_nonnegative(w.entries);
    const auto mr = is_totally_nonnegative(m.entries);
    ASSERT_TRUE(wr.is_tnn);
    ASSERT_TRUE(mr.is_tnn);
    ASSERT_LE(mr.minors_checked, wr.minors_checked);
  }
}

}  // namespace totpos
