#include <gtest/gtest.h>

#include <random>

#include "slg/combinations.hpp"
#include "slg/edge_set.hpp"

namespace {

TEST(EdgeSet, InsertEraseAndCount) {
  slg::EdgeSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  s.insert(64);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(129));
  s.erase(64);
  s.erase(64);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{0, 129}));
  EXPECT_EQ(s.to_label(), "e0,e129");
}

TEST(EdgeSet, RejectsOutOfRangeAndMixedUniverses) {
  slg::EdgeSet s(10);
  EXPECT_THROW(s.insert(10), slg::invalid_argument_error);
  EXPECT_THROW(s.contains(11), slg::invalid_argument_error);
  slg::EdgeSet t(11);
  EXPECT_THROW(s.intersects(t), slg::invalid_argument_error);
  EXPECT_THROW(s |= t, slg::invalid_argument_error);
}

TEST(EdgeSet, FullAndComplementStayInUniverse) {
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 200u}) {
    auto f = slg::EdgeSet::full(n);
    EXPECT_EQ(f.size(), n);
    EXPECT_TRUE(f.complement().empty());
    EXPECT_EQ(slg::EdgeSet(n).complement(), f);
  }
}

TEST(EdgeSetProperty, SetAlgebraMatchesCounts) {
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    slg::EdgeSet a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) a.insert(i);
      if (coin(rng)) b.insert(i);
    }
    const auto u = a | b;
    const auto x = a & b;
    EXPECT_EQ(u.size() + x.size(), a.size() + b.size());
    EXPECT_EQ((a - b).size(), a.size() - x.size());
    EXPECT_EQ(x.empty(), !a.intersects(b));
    EXPECT_TRUE(x.is_subset_of(a));
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_EQ(slg::EdgeSet(n, a.indices()), a);
  }
}

TEST(KSubsets, LexicographicOrder) {
  std::vector<std::vector<std::size_t>> seen;
  slg::KSubsets it(4, 2);
  do seen.push_back(it.current());
  while (it.next());
  std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(seen, expected);
}

TEST(KSubsets, CountsMatchBinomial) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) {
      slg::KSubsets it(n, k);
      std::uint64_t count = 0;
      if (!it.done()) {
        do ++count;
        while (it.next());
      }
      EXPECT_EQ(count, slg::binomial(n, k)) << n << " choose " << k;
    }
}

TEST(Binomial, ValuesAndSaturation) {
  EXPECT_EQ(slg::binomial(13, 6), 1716u);
  EXPECT_EQ(slg::binomial(38, 17), 28781143380ull);
  EXPECT_EQ(slg::binomial(5, 7), 0u);
  EXPECT_EQ(slg::binomial(4096, 2048), std::numeric_limits<std::uint64_t>::max());
}

} // namespace
