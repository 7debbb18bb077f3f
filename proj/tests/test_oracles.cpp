#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace media;
using namespace media::testing;

TEST(Oracles, AxiomCheckPassesOnSmallMedia) {
  for (const auto& [name, m] : catalog(false)) {
    if (m.stateCount() > oracles::kMaxAxiomStates) continue;
    auto r = oracles::bruteAxiomCheck(m);
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(Oracles, AxiomCheckFlagsEachAxiom) {
  // missing reverse transition
  Medium oneWay(TokenTable::paired(1), {{{0, 1}}, {}});
  EXPECT_FALSE(oracles::bruteAxiomCheck(oneWay).axiom1);

  // disconnected
  Medium apart(TokenTable::paired(1), {{{0, 1}}, {{1, 0}}, {}});
  EXPECT_FALSE(oracles::bruteAxiomCheck(apart).axiom2);

  // non-vacuous closed walk
  Medium cycle(TokenTable::paired(1), {{{0, 1}, {1, 3}}, {{0, 2}, {1, 0}}, {{0, 3}, {1, 1}}, {{0, 0}, {1, 2}}});
  EXPECT_FALSE(oracles::bruteAxiomCheck(cycle).axiom3);
}

TEST(Oracles, OnlyRouteIsInconsistent) {
  // path 0 -a-> 1 -b-> 2 -a~-> 3: 0 and 3 are joined only by an inconsistent message
  Medium m(TokenTable::paired(2), {{{0, 1}}, {{1, 0}, {2, 2}}, {{1, 3}, {3, 1}}, {{0, 2}}});
  auto r = oracles::bruteAxiomCheck(m);
  EXPECT_FALSE(r.axiom2);
  EXPECT_FALSE(verifyMedium(m).passed());
}

TEST(Oracles, SizeGuardsRefuse) {
  auto big = permutationMedium(4);
  EXPECT_THROW(oracles::bruteAxiomCheck(big), Error);
  EXPECT_THROW(oracles::bruteContent(big, 0), Error);
  EXPECT_THROW(oracles::bruteShortestReset(big), Error);
  EXPECT_THROW(oracles::bruteClosedScan(fromWellGradedFamily(powersetFamily(9))), Error);
}

TEST(Oracles, ShortestResetSingleState) {
  auto w = oracles::bruteShortestReset(singleStateMedium());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->empty());
}

TEST(Oracles, ShortestResetIsAReset) {
  for (const auto& [name, m] : catalog(false)) {
    if (m.stateCount() > oracles::kMaxResetStates) continue;
    auto w = oracles::bruteShortestReset(m);
    ASSERT_TRUE(w.has_value()) << name;
    const State sink = applyMessage(m, 0, *w);
    for (State s = 0; s < m.stateCount(); ++s) EXPECT_EQ(applyMessage(m, s, *w), sink) << name;
  }
}

TEST(Oracles, DistancesDiagonalAndUnitLengths) {
  for (const auto& [name, m] : catalog(false)) {
    auto d = oracles::bruteDistances(m, LengthFunction::unit(m.tokens()));
    ContentTable contents(m);
    for (State s = 0; s < m.stateCount(); ++s) {
      EXPECT_EQ(d[s][s], 0.0);
      for (State q = 0; q < m.stateCount(); ++q) {
        std::size_t differ = 0;
        for (Token t = 0; t < m.tokenCount(); ++t)
          if (contents.contains(q, t) && !contents.contains(s, t)) ++differ;
        EXPECT_EQ(d[s][q], static_cast<double>(differ)) << name;
      }
    }
  }
}

TEST(Oracles, ClosedScanCountsPowersetOrientations) {
  // every orientation of a cube is closed: flipping a pair relabels the cube
  auto m = fromWellGradedFamily(powersetFamily(3));
  EXPECT_EQ(oracles::bruteClosedScan(m).size(), 8u);
}
