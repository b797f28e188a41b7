#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "symlim/partitions.hpp"

using namespace symlim;

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({2, 0}), InvalidArgument);
  EXPECT_TRUE(Partition().empty());
  EXPECT_EQ(Partition({3, 1}).size(), 4u);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(transpose(Partition({5})), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(transpose(Partition({2, 2})), Partition({2, 2}));
}

TEST(Transpose, InvolutionUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(transpose(transpose(lambda)), lambda);
}

TEST(PartitionsOf, OrderAndCount) {
  const auto ps = partitions_of(4);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps.front(), Partition({4}));
  EXPECT_EQ(ps.back(), Partition({1, 1, 1, 1}));
  EXPECT_EQ(partitions_of(12).size(), 77u);
}

TEST(EnumerateTableaux, Examples) {
  EXPECT_EQ(enumerate_tableaux(Partition({2, 1})).size(), 2u);
  EXPECT_EQ(enumerate_tableaux(Partition({1, 1, 1})).size(), 1u);
  const auto t = enumerate_tableaux(Partition({3, 1}));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].rows(), (std::vector<std::vector<std::uint32_t>>{{1, 2, 3}, {4}}));
  EXPECT_EQ(t[1].rows(), (std::vector<std::vector<std::uint32_t>>{{1, 2, 4}, {3}}));
  EXPECT_EQ(t[2].rows(), (std::vector<std::vector<std::uint32_t>>{{1, 3, 4}, {2}}));
}

TEST(EnumerateTableaux, StandardDistinctAndOrdered) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto ts = enumerate_tableaux(lambda);
      std::set<std::vector<std::uint32_t>> seen;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_NO_THROW(Tableau(ts[i].rows()));
        EXPECT_TRUE(seen.insert(ts[i].reading_word()).second);
        if (i > 0) EXPECT_LT(ts[i - 1].reading_word(), ts[i].reading_word());
      }
    }
}

TEST(EnumerateTableaux, Cap) {
  EXPECT_THROW(enumerate_tableaux(Partition({4, 3, 2, 1}), 100), CapExceeded);
}

TEST(DimensionHook, Examples) {
  EXPECT_EQ(dimension_hook(Partition({1})), 1);
  EXPECT_EQ(dimension_hook(Partition({2, 1})), 2);
  EXPECT_EQ(dimension_hook(Partition({5, 1})), 5);
}

TEST(DimensionHook, SumOfSquaresIsFactorial) {
  for (std::size_t n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) sum += dimension_hook(lambda) * dimension_hook(lambda);
    EXPECT_EQ(sum, oracle::factorial(n));
  }
}

TEST(DimensionHook, MatchesCountsAndCornerRecursion) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(dimension_hook(lambda), oracle::tableau_count(lambda.parts()));
      EXPECT_EQ(dimension_hook(lambda), enumerate_tableaux(lambda).size());
    }
}

TEST(DimensionHook, NearRowProductFormula) {
  for (std::size_t size = 0; size <= 5; ++size)
    for (const auto& mu : size == 0 ? std::vector<Partition>{Partition()} : partitions_of(size))
      for (std::size_t n = size + mu.first() + 1; n <= 40; n += 3)
        EXPECT_EQ(Rational(dimension_hook(build_near_row(mu, n))), oracle::near_row_dimension(mu, n));
}

TEST(Tableau, Validation) {
  EXPECT_NO_THROW(Tableau({{1, 3}, {2, 4}, {5, 6}}));
  EXPECT_THROW(Tableau({{1, 2}, {4, 3}}), InvalidArgument);
  EXPECT_THROW(Tableau({{2, 3}, {1}}), InvalidArgument);
  EXPECT_THROW(Tableau({{1, 2}, {2}}), InvalidArgument);
  EXPECT_THROW(Tableau({{1}, {2, 3}}), InvalidArgument);
}

TEST(ContentAndPosition, Examples) {
  const Tableau row({{1, 2, 3}});
  auto c = content_and_position(row, 3);
  EXPECT_EQ(c.content, 2);
  EXPECT_EQ(c.row, 1u);
  EXPECT_EQ(c.column, 3u);

  const Tableau hook({{1, 3}, {2}});
  c = content_and_position(hook, 2);
  EXPECT_EQ(c.content, -1);
  EXPECT_EQ(c.row, 2u);
  EXPECT_EQ(c.column, 1u);

  const Tableau t({{1, 2, 4}, {3}});
  c = content_and_position(t, 4);
  EXPECT_EQ(c.content, 2);
  EXPECT_EQ(c.row, 1u);
  EXPECT_EQ(c.column, 3u);

  EXPECT_THROW(content_and_position(t, 5), InvalidArgument);
}

TEST(ClassTails, Examples) {
  EXPECT_EQ(class_tail(Partition({5, 2, 1})), Partition({2, 1}));
  EXPECT_EQ(hat_class_tail(Partition({5, 2, 1})), Partition({4, 1}));
  EXPECT_TRUE(class_tail(Partition({1})).empty());
  EXPECT_TRUE(hat_class_tail(Partition({1})).empty());
}

TEST(BuildNearRow, Examples) {
  EXPECT_EQ(build_near_row(Partition({1}), 6), Partition({5, 1}));
  EXPECT_EQ(build_near_row(Partition({2, 1}), 12), Partition({9, 2, 1}));
  EXPECT_EQ(build_near_row(Partition({1}), 2), Partition({1, 1}));
  EXPECT_THROW(build_near_row(Partition({2, 1}), 4), InvalidArgument);
}

TEST(BuildNearRow, ClassTailRoundTrip) {
  for (std::size_t size = 1; size <= 6; ++size)
    for (const auto& mu : partitions_of(size))
      for (std::size_t n = size + mu.first(); n <= 20; ++n)
        EXPECT_EQ(class_tail(build_near_row(mu, n)), mu);
}
