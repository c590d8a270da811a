#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "spbranch/harness.hpp"

using namespace spbranch;
using namespace spbranch::harness;

TEST(Grid, OrderAndBounds) {
  const auto grid = lambda_grid(2, 2);
  // n=1: (), (1), (2), (1,1); n=2: same four.
  ASSERT_EQ(grid.size(), 8u);
  EXPECT_EQ(grid[0], std::make_pair(1, Partition{}));
  EXPECT_EQ(grid[2], std::make_pair(1, Partition{2}));
  EXPECT_EQ(grid[3], std::make_pair(1, Partition{1, 1}));
  EXPECT_EQ(grid[4].first, 2);
  EXPECT_EQ(all_columns(2).size(), 16u);
  EXPECT_EQ(all_columns(1)[3].values(), (std::vector<int>{1, 2}));
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int workers : {1, 3, 8}) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(Suites, SmallGridPasses) {
  Config c;
  c.max_n = 1;
  c.max_size = 4;
  c.column_max_n = 2;
  c.rmatrix_max_m = 3;
  c.pieri_max_m = 2;
  c.pieri_max_size = 3;
  c.successor_max_n = 1;
  c.successor_max_size = 4;
  for (const auto& r : run_suites(c)) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.counterexample.value_or("");
    EXPECT_GT(r.checks, 0) << r.name;
  }
}

TEST(Suites, ReportsAreIndependentOfWorkerCount) {
  Config one;
  one.max_n = 2;
  one.max_size = 4;
  Config many = one;
  many.workers = 4;
  const auto a = run_suites(one, {"bijectivity", "recording", "multiplicities"});
  const auto b = run_suites(many, {"bijectivity", "recording", "multiplicities"});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].checks, b[i].checks);
    EXPECT_EQ(a[i].failures, b[i].failures);
  }
}

TEST(Suites, FaultInjectionYieldsMinimalCounterexample) {
  Config c;
  c.corrupt_reduce = true;
  const auto reports = run_suites(c, {"factorization"});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].passed());
  ASSERT_TRUE(reports[0].counterexample.has_value());
  EXPECT_EQ(reports[0].counterexample->rfind("n=1 column (1,2):", 0), 0u) << *reports[0].counterexample;
}

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suites(Config{}, {"nonsense"}), std::invalid_argument); }
