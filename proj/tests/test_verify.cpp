#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace media;
using namespace media::testing;

namespace {

Medium withAdjacency(const Medium& m, std::vector<std::vector<Transition>> adjacency) {
  return Medium(m.tokens(), std::move(adjacency), m.stateLabels());
}

}  // namespace

TEST(Verify, GeneratedMediaPass) {
  for (const auto& [name, m] : catalog()) {
    auto report = verifyMedium(m);
    EXPECT_TRUE(report.passed()) << name << ": " << (report.passed() ? "" : report.violations.front().message);
  }
}

TEST(Verify, DroppedReverseTransition) {
  auto m = permutationMedium(3);
  auto adjacency = adjacencyOf(m);
  const auto dropped = adjacency[0].front();
  adjacency[0].erase(adjacency[0].begin());
  auto report = verifyMedium(withAdjacency(m, adjacency));
  ASSERT_TRUE(report.has(Check::ReverseClosure));
  const auto& v = report.violations.front();
  EXPECT_EQ(v.check, Check::ReverseClosure);
  EXPECT_EQ(v.state, dropped.to);
  EXPECT_EQ(v.token, m.tokens().reverse(dropped.token));
  EXPECT_EQ(v.other, State{0});
}

TEST(Verify, UnusedToken) {
  Medium m(TokenTable::paired(2), {{{0, 1}}, {{1, 0}}});
  auto report = verifyMedium(m);
  EXPECT_TRUE(report.has(Check::UnusedToken));
  EXPECT_FALSE(report.passed());
}

TEST(Verify, SelfLoopAndDuplicate) {
  Medium loop(TokenTable::paired(1), {{{0, 1}, {1, 0}}, {{1, 0}}});
  EXPECT_TRUE(verifyMedium(loop).has(Check::SelfLoop));
  Medium twice(TokenTable::paired(1), {{{0, 1}, {0, 2}}, {{1, 0}}, {{1, 0}}});
  EXPECT_TRUE(verifyMedium(twice).has(Check::Determinism));
}

TEST(Verify, Disconnected) {
  Medium m(TokenTable::paired(1), {{{0, 1}}, {{1, 0}}, {}, {}});
  EXPECT_TRUE(verifyMedium(m).has(Check::Connectivity));
}

TEST(Verify, FourCycleWithOnePairFailsContent) {
  // a 4-cycle using one token pair all the way round: each token is its own detour
  Medium m(TokenTable::paired(1), {{{0, 1}, {1, 3}}, {{0, 2}, {1, 0}}, {{0, 3}, {1, 1}}, {{0, 0}, {1, 2}}});
  auto report = verifyMedium(m);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.has(Check::ContentPartition));
}

TEST(Verify, SixCycleWithThreePairsFailsLaterChecks) {
  // hexagon labelled a b c a b c: reverse-closed and connected but not a medium
  const std::vector<Token> word{0, 2, 4, 0, 2, 4};
  std::vector<std::vector<Transition>> adjacency(6);
  for (State s = 0; s < 6; ++s) {
    adjacency[s].push_back({word[s], static_cast<State>((s + 1) % 6)});
    adjacency[(s + 1) % 6].push_back({word[s] ^ 1u, s});
  }
  Medium m(TokenTable::paired(3), adjacency);
  auto report = verifyMedium(m);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(oracles::bruteAxiomCheck(m).passed());
}

TEST(Verify, AgreesWithAxiomOracleOnCorruptions) {
  std::mt19937_64 rng(99);
  int broken = 0;
  for (const auto& [name, m] : catalog(false)) {
    if (m.stateCount() < 2 || m.stateCount() > 10) continue;
    for (int i = 0; i < 12; ++i) {
      auto c = corruptMedium(m, rng);
      const bool fast = verifyMedium(c).passed();
      EXPECT_EQ(fast, oracles::bruteAxiomCheck(c).passed()) << name << " corruption " << i;
      if (!fast) ++broken;
    }
  }
  EXPECT_GT(broken, 50);
}

TEST(Verify, WitnessesAreCapped) {
  auto m = fromWellGradedFamily(powersetFamily(5));
  auto adjacency = adjacencyOf(m);
  // drop every insertion of the last element; 16 deletions lose their reverse
  for (auto& list : adjacency)
    if (list.back().token < m.tokens().reverse(list.back().token)) list.pop_back();
  auto report = verifyMedium(withAdjacency(m, adjacency));
  EXPECT_FALSE(report.passed());
  const auto reverse = std::count_if(report.violations.begin(), report.violations.end(),
                                     [](const Violation& v) { return v.check == Check::ReverseClosure; });
  EXPECT_EQ(static_cast<std::size_t>(reverse), detail::kWitnessesPerCheck);
}

TEST(Isomorphism, PermutationsAcrossGenerators) {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto perm = permutationMedium(k);
    auto top = topologicalOrderingMedium(Graph::withVertices(k));
    auto acyc = acyclicOrientationMedium(Graph::complete(k));
    EXPECT_TRUE(findLabelIsomorphism(perm, top).has_value()) << k;
    EXPECT_TRUE(findLabelIsomorphism(perm, acyc).has_value()) << k;
  }
}

TEST(Isomorphism, RandomRelabeling) {
  std::mt19937_64 rng(3);
  auto m = permutationMedium(4);
  auto p = permuteMedium(m, rng);
  EXPECT_TRUE(findLabelIsomorphism(m, p).has_value());
  auto q = fromWellGradedFamily(powersetFamily(4));
  EXPECT_FALSE(findLabelIsomorphism(m, q).has_value());
}
