#include <gtest/gtest.h>

#include <set>

#include "spbranch/branching.hpp"
#include "spbranch/error.hpp"
#include "spbranch/plactic.hpp"

using namespace spbranch;

namespace {

const Tableau kT{{1, 1, 2, 4}, {2, 2, 3}, {4, 4}, {5, 6}, {6}};
const Tableau kP{{2, 4, 4}, {6}};
const Tableau kQ(Partition{3, 1}, {{1}, {2, 1}, {3, 2}, {3, 1}, {1}});

}  // namespace

TEST(Successor, FixesSymplecticTableaux) {
  EXPECT_EQ(successor(kP, 3), kP);
  for (int n = 1; n <= 2; ++n) {
    for (int size = 0; size <= 4; ++size) {
      for (const auto& nu : partitions_of(size, n)) {
        for (const auto& t : enumerate_spt(nu, n)) ASSERT_EQ(successor(t, n), t);
      }
    }
  }
}

TEST(Successor, SingleColumnOneTwoVanishes) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(successor(Tableau{{1}, {2}}, n).empty());
}

TEST(Successor, RejectsNonSemistandardInput) {
  EXPECT_THROW(successor(Tableau{{2, 1}}, 1), ValidationError);
  EXPECT_THROW(successor(Tableau{{1, 5}}, 2), ValidationError);
}

TEST(LrMap, WorkedExample) {
  std::vector<LrStep> trace;
  const LrResult r = lr_map(kT, 3, &trace);
  EXPECT_EQ(r.p, kP);
  EXPECT_EQ(r.q, kQ);
  EXPECT_EQ(r.steps, 3);
  EXPECT_EQ(r.trajectory, (std::vector<Partition>{{4, 3, 2, 2, 1}, {3, 2, 2, 1}, {3, 1, 1, 1}, {3, 1}}));

  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[0].removed.values, (std::vector<int>{1, 2, 5, 6}));
  EXPECT_EQ(trace[0].reduced.values(), (std::vector<int>{4}));
  EXPECT_EQ(trace[0].p, (Tableau{{1, 2, 4}, {2, 3}, {4, 4}, {6}}));
  EXPECT_EQ(trace[0].q, Tableau(Partition{3, 2, 2, 1}, {{1}, {1}, {}, {1}, {1}}));
  EXPECT_EQ(trace[1].removed.values, (std::vector<int>{1, 2}));
  EXPECT_EQ(trace[1].p, (Tableau{{2, 4, 4}, {3}, {4}, {6}}));
  EXPECT_EQ(trace[1].q, Tableau(Partition{3, 1, 1, 1}, {{1}, {2, 1}, {2}, {1}, {1}}));
  EXPECT_EQ(trace[2].removed.values, (std::vector<int>{3, 4}));
  EXPECT_EQ(trace[2].p, kP);
  EXPECT_EQ(trace[2].q, kQ);
  EXPECT_TRUE(trace[3].removed.values.empty());
  EXPECT_EQ(trace[3].column.values(), (std::vector<int>{2, 6}));
}

TEST(LrMap, SymplecticInputIsFixed) {
  const LrResult r = lr_map(kP, 3);
  EXPECT_EQ(r.p, kP);
  EXPECT_TRUE(r.q.empty());
  EXPECT_EQ(r.q.inner(), kP.outer());
  EXPECT_EQ(r.trajectory, (std::vector<Partition>{kP.outer()}));
  EXPECT_EQ(r.steps, 0);
}

TEST(LrMap, ColumnOneTwo) {
  const LrResult r = lr_map(Tableau{{1}, {2}}, 1);
  EXPECT_TRUE(r.p.empty());
  EXPECT_EQ(r.q, (Tableau{{1}, {1}}));
  EXPECT_EQ(r.steps, 1);
}

TEST(IsRecording, Examples) {
  EXPECT_TRUE(is_recording(kQ, {4, 3, 2, 2, 1}, {3, 1}, 3));
  EXPECT_TRUE(is_recording(Tableau(Partition{2, 1}, {{}, {}}), {2, 1}, {2, 1}, 2));
  EXPECT_FALSE(is_recording(Tableau{{2}, {1}}, {1, 1}, {}, 1));
  EXPECT_TRUE(is_recording(Tableau{{1}, {1}}, {1, 1}, {}, 1));
  // nu longer than n.
  EXPECT_FALSE(is_recording(Tableau(Partition{1, 1}, {{}, {}}), {1, 1}, {1, 1}, 1));
  EXPECT_THROW(is_recording(kQ, {4, 3, 2, 2, 1}, {3}, 3), ValidationError);
}

TEST(IsRecording, EachAxiomIsEnforced) {
  // (R1): row must strictly decrease.
  EXPECT_FALSE(is_recording(Tableau{{1, 1}, {1, 1}}, {2, 2}, {}, 2));
  // (R3): odd count.
  EXPECT_FALSE(is_recording(Tableau{{1}}, {1}, {}, 1));
  // (R4): three rows collapse at n=1 only if label 1 has >= 2(3-1) = 4 cells.
  EXPECT_FALSE(is_recording(Tableau(Partition{1}, {{}, {1}, {1}}), {1, 1, 1}, {1}, 1));
  EXPECT_TRUE(is_recording(Tableau(Partition{1}, {{}, {1}, {1}}), {1, 1, 1}, {1}, 2));
  // (R5): the first row already holds more 2s than 1s.
  EXPECT_FALSE(is_recording(Tableau{{2}, {2}, {1}, {1}}, {1, 1, 1, 1}, {}, 2));
}

TEST(EnumerateRecording, Examples) {
  EXPECT_EQ(enumerate_recording({1, 1}, {}, 1), (std::vector<Tableau>{Tableau{{1}, {1}}}));
  EXPECT_EQ(enumerate_recording({2, 1}, {2, 1}, 2).size(), 1u);
  const auto big = enumerate_recording({4, 3, 2, 2, 1}, {3, 1}, 3);
  EXPECT_NE(std::find(big.begin(), big.end(), kQ), big.end());
  for (const auto& q : big) EXPECT_TRUE(is_recording(q, {4, 3, 2, 2, 1}, {3, 1}, 3));
}

TEST(LrMap, BijectionOntoSptTimesRecordingSmallGrid) {
  for (int n = 1; n <= 2; ++n) {
    for (int size = 0; size <= 5; ++size) {
      for (const auto& lambda : partitions_of(size, 2 * n)) {
        std::set<std::pair<Tableau, Tableau>> image;
        const auto sst = enumerate_sst(lambda, 2 * n);
        for (const auto& t : sst) {
          LrResult r = lr_map(t, n);
          ASSERT_TRUE(is_symplectic(r.p, n));
          ASSERT_TRUE(is_recording(r.q, lambda, r.p.outer(), n));
          image.emplace(std::move(r.p), std::move(r.q));
        }
        ASSERT_EQ(image.size(), sst.size()) << lambda.to_string();
        std::size_t codomain = 0;
        for (const auto& nu : enumerate_partitions(n, lambda)) {
          const auto spt = enumerate_spt(nu, n);
          const auto rec = enumerate_recording(lambda, nu, n);
          codomain += spt.size() * rec.size();
          for (const auto& p : spt) {
            for (const auto& q : rec) ASSERT_TRUE(image.count({p, q})) << lambda.to_string();
          }
        }
        ASSERT_EQ(codomain, sst.size()) << lambda.to_string();
      }
    }
  }
}

TEST(LrInverse, RecoversExampleAndRoundTrips) {
  EXPECT_EQ(lr_inverse_lookup(kP, kQ, {4, 3, 2, 2, 1}, 3), kT);
  EXPECT_EQ(lr_inverse_lookup(kP, Tableau(kP.outer(), {{}, {}}), kP.outer(), 3), kP);
  for (int n = 1; n <= 2; ++n) {
    for (int size = 0; size <= 6; ++size) {
      for (const auto& lambda : partitions_of(size, 2 * n)) {
        const LrInverse inv(lambda, n);
        for (const auto& t : enumerate_sst(lambda, 2 * n)) {
          const LrResult r = lr_map(t, n);
          ASSERT_EQ(inv.lookup(r.p, r.q), t);
        }
      }
    }
  }
}

TEST(LrInverse, RejectsPairsOutsideTheCodomain) {
  const LrInverse inv({1, 1}, 1);
  EXPECT_THROW(inv.lookup(Tableau{{1}}, Tableau(Partition{1}, {{}, {1}})), NotInCodomain);
}
