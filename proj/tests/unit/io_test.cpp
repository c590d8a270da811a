#include <gtest/gtest.h>

#include "spbranch/error.hpp"
#include "spbranch/io.hpp"

using namespace spbranch;

TEST(Json, TableauRoundTrip) {
  const Tableau t(Partition{2, 1}, {{5}, {4, 6}, {7}});
  const auto j = io::to_json(t);
  EXPECT_EQ(j.dump(), R"({"outer":[3,3,1],"inner":[2,1],"rows":[[5],[4,6],[7]]})");
  EXPECT_EQ(io::tableau_from_json(j), t);
  EXPECT_EQ(io::parse_tableau(j.dump()), t);
  EXPECT_EQ(io::parse_tableau("[[1,2],[3]]"), (Tableau{{1, 2}, {3}}));
}

TEST(Json, RejectsMalformedTableaux) {
  EXPECT_THROW(io::parse_tableau(R"({"outer":[2],"rows":[[1]]})"), ValidationError);
  EXPECT_THROW(io::parse_tableau(R"({"rows":[[1,"x"]]})"), ValidationError);
  EXPECT_THROW(io::parse_tableau("[[1],[2,3]]"), ValidationError);
  EXPECT_THROW(io::parse_tableau("[[1,"), ValidationError);
}

TEST(Json, LrResultAndTable) {
  LrResult r;
  r.p = Tableau{{1}};
  r.q = Tableau(Partition{1}, {{}, {1}, {1}});
  r.trajectory = {Partition{1, 1, 1}, Partition{1}};
  r.steps = 1;
  EXPECT_EQ(io::to_json(r).dump(),
            R"({"p":{"outer":[1],"inner":[],"rows":[[1]]},"q":{"outer":[1,1,1],"inner":[1],"rows":[[],[1],[1]]},)"
            R"("trajectory":[[1,1,1],[1]],"steps":1})");
  MultiplicityTable m{Partition{2}, 1, Backend::sundaram, {{Partition{}, 3}, {Partition{2}, 1}}};
  EXPECT_EQ(io::to_json(m).dump(),
            R"({"lambda":[2],"n":1,"backend":"sundaram","multiplicities":[{"nu":[2],"m":1},{"nu":[],"m":3}]})");
}

TEST(TextGrid, ParsesDotsAsInnerCells) {
  const Tableau t = io::parse_tableau(". . 3\n. 2 4\n1\n\n");
  EXPECT_EQ(t, Tableau(Partition{2, 1}, {{3}, {2, 4}, {1}}));
  EXPECT_THROW(io::parse_text_grid("1 . 2"), ValidationError);
  EXPECT_THROW(io::parse_text_grid("1 x"), ValidationError);
  EXPECT_THROW(io::parse_text_grid(". 1\n. . 2"), ValidationError);
}

TEST(Pretty, StraightAndSkew) {
  EXPECT_EQ(io::pretty(Tableau{{1, 2}, {3}}),
            "┌───┬───┐\n"
            "│ 1 │ 2 │\n"
            "├───┼───┘\n"
            "│ 3 │\n"
            "└───┘\n");
  EXPECT_EQ(io::pretty(Tableau(Partition{1}, {{5}, {6}})),
            "    ┌───┐\n"
            "    │ 5 │\n"
            "┌───┼───┘\n"
            "│ 6 │\n"
            "└───┘\n");
  EXPECT_EQ(io::pretty(Tableau{{1, 10}}),
            "┌────┬────┐\n"
            "│  1 │ 10 │\n"
            "└────┴────┘\n");
  EXPECT_EQ(io::pretty(Tableau{}), "∅\n");
  EXPECT_EQ(io::pretty(Tableau(Partition{2}, {{}})), "∅\n");
}

TEST(Format, SetsAndTuples) {
  EXPECT_EQ(io::format_set({1, 2, 5, 6}), "{1,2,5,6}");
  EXPECT_EQ(io::format_set({}), "{}");
  EXPECT_EQ(io::format_tuple({2, 6}), "(2,6)");
}

TEST(Diagnostics, NamesTheViolatedInvariant) {
  EXPECT_EQ(io::semistandard_violation(Tableau{{1, 2, 7}}, 6), "entry 7 at (1,3) exceeds 2n = 6");
  EXPECT_EQ(io::semistandard_violation(Tableau{{2, 1}}, 6), "row not weakly increasing at (1,2)");
  EXPECT_EQ(io::semistandard_violation(Tableau{{1}, {2}, {2}}, 6), "column not strictly increasing at (3,1)");
  EXPECT_EQ(io::semistandard_violation(Tableau{{1, 1}, {2}}, 6), "");
}
