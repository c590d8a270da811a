#include <gtest/gtest.h>

#include "spbranch/error.hpp"
#include "spbranch/reduction.hpp"
#include "spbranch/rmatrix.hpp"
#include "unit/oracles.hpp"

using namespace spbranch;

namespace {
Column c(std::vector<int> v, int m) { return Column(std::move(v), m); }
}  // namespace

TEST(RMatrix, SingletonAgainstComplement) {
  EXPECT_EQ(r_matrix(c({4}, 4), c({1, 2, 3}, 4)), (ColumnPair{c({2, 3, 4}, 4), c({1}, 4)}));
  EXPECT_EQ(r_matrix(c({1, 3, 4}, 4), c({1, 2}, 4)), (ColumnPair{c({1, 4}, 4), c({1, 2, 3}, 4)}));
  // R((m), (1..m-1)) = ((2..m), (1)) for every m.
  for (int m = 2; m <= 6; ++m) {
    std::vector<int> mvee;
    for (int x = 1; x < m; ++x) mvee.push_back(x);
    std::vector<int> onevee;
    for (int x = 2; x <= m; ++x) onevee.push_back(x);
    EXPECT_EQ(r_matrix(c({m}, m), c(mvee, m)), (ColumnPair{c(onevee, m), c({1}, m)})) << "m=" << m;
  }
}

TEST(RMatrix, EqualColumnsAreFixed) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& v : oracle::subsets(m)) EXPECT_EQ(r_matrix(c(v, m), c(v, m)), (ColumnPair{c(v, m), c(v, m)}));
  }
}

TEST(RMatrix, RoundTripAndSizeSwap) {
  for (int m = 1; m <= 5; ++m) {
    const auto sets = oracle::subsets(m);
    for (const auto& va : sets) {
      for (const auto& vb : sets) {
        const Column a = c(va, m);
        const Column b = c(vb, m);
        const ColumnPair r = r_matrix(a, b);
        ASSERT_EQ(r.left.size(), b.size());
        ASSERT_EQ(r.right.size(), a.size());
        ASSERT_EQ(r_matrix(r.left, r.right), (ColumnPair{a, b}));
        if (a.size() == b.size()) ASSERT_EQ(detail::r_matrix_short_left(a, b), detail::r_matrix_long_left(a, b));
        // Entries are conserved as a multiset.
        std::vector<int> before = va;
        before.insert(before.end(), vb.begin(), vb.end());
        std::vector<int> after = r.left.values();
        after.insert(after.end(), r.right.values().begin(), r.right.values().end());
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        ASSERT_EQ(before, after);
      }
    }
  }
}

TEST(RMatrix, NestedColumnsSwap) {
  for (int m = 1; m <= 5; ++m) {
    const auto sets = oracle::subsets(m);
    for (const auto& va : sets) {
      for (const auto& vb : sets) {
        if (va.size() > vb.size() || !std::includes(vb.begin(), vb.end(), va.begin(), va.end())) continue;
        const Column a = c(va, m);
        const Column b = c(vb, m);
        ASSERT_EQ(r_matrix(a, b), (ColumnPair{b, a}));
        ASSERT_EQ(r_matrix(b, a), (ColumnPair{a, b}));
      }
    }
  }
}

TEST(VeeSplit, Examples) {
  EXPECT_EQ(vee_split(c({1, 2, 4, 5, 6}, 6)), std::make_pair(c({6}, 6), c({1, 2, 4, 5}, 6)));
  EXPECT_EQ(vee_split(c({7}, 8)), std::make_pair(c({7}, 8), c({}, 8)));
  EXPECT_EQ(vee_split(c({1, 3, 4, 5, 6, 7, 11, 12, 13, 14}, 14)),
            std::make_pair(c({14}, 14), c({1, 3, 4, 5, 6, 7, 11, 12, 13}, 14)));
  EXPECT_THROW(vee_split(c({}, 2)), ValidationError);
}

TEST(KMap, Examples) {
  EXPECT_EQ(k_map(c({3}, 4), 2), c({1, 2, 3}, 4));
  EXPECT_EQ(k_map(c({4}, 4), 2), c({1, 2, 4}, 4));
  EXPECT_EQ(k_inv(c({1, 2, 3}, 4), 2), c({3}, 4));
  for (int n = 1; n <= 4; ++n) {
    for (int v = 1; v <= 2 * n; ++v) EXPECT_EQ(k_inv(k_map(c({v}, 2 * n), n), n), c({v}, 2 * n));
  }
  EXPECT_EQ(complement_of(2, 2), c({1, 3, 4}, 4));
}

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge_append(c({5}, 6), c({1, 2}, 6)), c({1, 2, 5}, 6));
  EXPECT_FALSE(wedge_append(c({2}, 6), c({1, 2}, 6)).has_value());
  EXPECT_EQ(wedge_append(c({1}, 6), c({}, 6)), c({1}, 6));
}

TEST(Pi, Examples) {
  EXPECT_TRUE(pi_project(c({1, 2}, 4)).empty());
  EXPECT_EQ(pi_project(c({1, 3}, 4)), c({1, 3}, 4));
  EXPECT_TRUE(pi_project(c({}, 4)).empty());
}

TEST(ReduceFactored, Examples) {
  EXPECT_EQ(reduce_factored(c({1, 3, 4, 5, 6, 7, 11, 12, 13, 14}, 14), 7).values(), (std::vector<int>{1, 7, 11, 12}));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(reduce_factored(c({1, 2}, 2 * n), n).empty());
  EXPECT_EQ(reduce_factored(c({1, 3, 5}, 6), 3).values(), (std::vector<int>{1, 3, 5}));
}

TEST(ReduceFactored, EqualsReduceOnEveryColumn) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& v : oracle::subsets(2 * n)) {
      const Column a = c(v, 2 * n);
      ASSERT_EQ(reduce_factored(a, n).values(), reduce(a, n).values()) << "n=" << n;
    }
  }
}
