#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace media;
using namespace media::testing;

namespace {

void expectReset(const Medium& m, const std::string& name) {
  auto r = resetSequence(m);
  ASSERT_EQ(r.word.size(), m.stateCount() - 1) << name;
  for (State s = 0; s < m.stateCount(); ++s) EXPECT_EQ(applyMessage(m, s, r.word), r.sink) << name << " from " << s;
}

State stateNamed(const Medium& m, const std::string& label) {
  for (State s = 0; s < m.stateCount(); ++s)
    if (m.stateLabel(s) == label) return s;
  return kNoState;
}

}  // namespace

TEST(Reset, SingleState) {
  auto r = resetSequence(singleStateMedium());
  EXPECT_TRUE(r.word.empty());
  EXPECT_EQ(r.sink, State{0});
}

TEST(Reset, SynchronizesEveryCatalogMedium) {
  std::mt19937_64 rng(17);
  for (const auto& [name, m] : catalog()) {
    expectReset(m, name);
    expectReset(permuteMedium(m, rng), name + " permuted");
  }
}

TEST(Reset, SubsetsMediumNeedsMoreThanThree) {
  auto m = subsetsMedium();
  expectReset(m, "subsets");
  auto best = oracles::bruteShortestReset(m);
  ASSERT_TRUE(best.has_value());
  EXPECT_GT(best->size(), 3u);
  EXPECT_LE(best->size(), 5u);
}

TEST(Reset, NeverShorterThanOptimum) {
  for (const auto& [name, m] : catalog(false)) {
    if (m.stateCount() > oracles::kMaxResetStates) continue;
    auto best = oracles::bruteShortestReset(m);
    ASSERT_TRUE(best.has_value()) << name;
    EXPECT_GE(resetSequence(m).word.size(), best->size()) << name;
  }
}

TEST(ContentDag, ArcsArePositiveTransitions) {
  auto m = permutationMedium(3);
  auto o = contentOrientation(m, 0);
  auto arcs = contentDag(m, o);
  EXPECT_EQ(arcs.size(), m.transitionCount() / 2);
  for (const auto& a : arcs) EXPECT_TRUE(o.isPositive(a.token));
}

TEST(SingleTarget, UnitLengthsCountContentDifference) {
  auto m = permutationMedium(4);
  auto unit = LengthFunction::unit(m.tokens());
  for (State q = 0; q < m.stateCount(); q += 5) {
    auto d = distancesToState(m, unit, q);
    const auto cq = computeContent(m, q);
    for (State s = 0; s < m.stateCount(); ++s) {
      const auto cs = computeContent(m, s);
      std::vector<Token> missing;
      std::set_difference(cq.tokens.begin(), cq.tokens.end(), cs.tokens.begin(), cs.tokens.end(),
                          std::back_inserter(missing));
      EXPECT_EQ(d[s], static_cast<double>(missing.size()));
    }
  }
}

TEST(SingleTarget, SubsetsExample) {
  auto m = subsetsMedium();
  const State from = stateNamed(m, "{1}"), to = stateNamed(m, "{2,3}");
  auto unit = LengthFunction::unit(m.tokens());
  EXPECT_EQ(distancesToState(m, unit, to)[from], 3.0);
  EXPECT_EQ(singleSourceDistances(m, unit, from)[to], 3.0);
  auto table = allPairsShortestPaths(m, unit);
  EXPECT_EQ(straightPathBetween(m, table, from, to).size(), 3u);
}

TEST(SingleTarget, MatchesBellmanFord) {
  std::mt19937_64 rng(23);
  for (const auto& [name, m] : catalog(false)) {
    auto lengths = randomLengths(m.tokens(), rng);
    auto brute = oracles::bruteDistances(m, lengths);
    for (State q = 0; q < m.stateCount(); ++q) {
      auto to = distancesToState(m, lengths, q);
      auto from = singleSourceDistances(m, lengths, q);
      for (State s = 0; s < m.stateCount(); ++s) {
        EXPECT_EQ(to[s], brute[s][q]) << name;
        EXPECT_EQ(from[s], brute[q][s]) << name;
      }
    }
  }
}

TEST(SingleTarget, NonnegativeFarthestStateIsComplement) {
  std::mt19937_64 rng(29);
  for (const auto& [name, m] : catalog(false)) {
    std::vector<double> values(m.tokenCount());
    for (auto& v : values) v = static_cast<double>(rng() % 4);
    LengthFunction lengths(m.tokens(), values);
    for (State q = 0; q < m.stateCount(); ++q) {
      auto c = complementOf(m, q);
      if (!c) continue;
      auto d = distancesToState(m, lengths, q);
      EXPECT_EQ(d[*c], *std::max_element(d.begin(), d.end())) << name;
    }
  }
}

TEST(Apsp, DiagonalAndFirstTokens) {
  auto m = permutationMedium(3);
  auto table = allPairsShortestPaths(m, LengthFunction::unit(m.tokens()));
  for (State s = 0; s < m.stateCount(); ++s) {
    EXPECT_EQ(table.distance(s, s), 0.0);
    EXPECT_EQ(table.firstToken(s, s), kNoToken);
  }
  EXPECT_EQ(table.distance(stateNamed(m, "abc"), stateNamed(m, "cba")), 3.0);
  EXPECT_THROW(table.distance(0, 6), std::out_of_range);
}

TEST(Apsp, MatchesBellmanFordWithNegativeLengths) {
  std::mt19937_64 rng(31);
  for (const auto& [name, m0] : catalog(false)) {
    auto m = permuteMedium(m0, rng);
    auto lengths = randomLengths(m.tokens(), rng);
    auto table = allPairsShortestPaths(m, lengths);
    auto brute = oracles::bruteDistances(m, lengths);
    const auto n = m.stateCount();
    for (State s = 0; s < n; ++s)
      for (State q = 0; q < n; ++q) {
        ASSERT_EQ(table.distance(s, q), brute[s][q]) << name;
        auto w = straightPathBetween(m, table, s, q);
        EXPECT_EQ(applyMessage(m, s, w), q);
        EXPECT_TRUE(isConsistent(m, w));
        EXPECT_TRUE(isStepwiseEffective(m, s, w));
      }
    const double bound = 4.0 * n * (m.tokenCount() / 2.0 + 2.0 * n);
    EXPECT_LE(static_cast<double>(table.scanWork()), bound) << name;
  }
}

TEST(Apsp, RejectsMismatchedLengths) {
  auto m = permutationMedium(3);
  auto other = LengthFunction::unit(TokenTable::paired(1));
  EXPECT_THROW(allPairsShortestPaths(m, other), Error);
  EXPECT_THROW(distancesToState(m, other, 0), Error);
}

TEST(LengthFunction, RejectsNegativePairs) {
  auto tokens = TokenTable::paired(1);
  EXPECT_THROW(LengthFunction(tokens, {-2.0, 1.0}), Error);
  EXPECT_NO_THROW(LengthFunction(tokens, {-2.0, 2.0}));
  EXPECT_THROW(LengthFunction(tokens, {1.0}), Error);
}

TEST(Complements, SubsetsPairs) {
  auto m = subsetsMedium();
  auto pairs = allComplementaryPairs(m);
  std::set<std::pair<std::string, std::string>> named;
  for (auto [a, b] : pairs) {
    auto x = m.stateLabel(a), y = m.stateLabel(b);
    if (x > y) std::swap(x, y);
    named.emplace(x, y);
  }
  EXPECT_EQ(named, (std::set<std::pair<std::string, std::string>>{
                       {"{1}", "{2,3}"}, {"{1,3}", "{2}"}, {"{1,2}", "{3}"}}));
  EXPECT_EQ(m.stateLabel(*complementOf(m, stateNamed(m, "{1}"))), "{2,3}");
}

TEST(Complements, SingleStateIsSelfComplementary) {
  auto m = singleStateMedium();
  EXPECT_EQ(allComplementaryPairs(m), (std::vector<std::pair<State, State>>{{0, 0}}));
  EXPECT_EQ(complementOf(m, 0), State{0});
}

TEST(Complements, MissingInBoundedFamily) {
  auto m = downwardClosedMedium(boundedSizeFamily(3, 1));
  EXPECT_TRUE(allComplementaryPairs(m).empty());
  for (State s = 0; s < m.stateCount(); ++s) EXPECT_FALSE(complementOf(m, s).has_value());
}

TEST(Complements, MatchBruteForceAndAreSymmetric) {
  std::mt19937_64 rng(37);
  for (const auto& [name, m0] : catalog()) {
    if (m0.stateCount() > 64) continue;
    auto m = permuteMedium(m0, rng);
    auto pairs = allComplementaryPairs(m);
    EXPECT_EQ(pairs, oracles::bruteComplementPairs(m)) << name;
    std::vector<int> partners(m.stateCount(), 0);
    for (auto [a, b] : pairs) {
      ++partners[a];
      if (a != b) ++partners[b];
      EXPECT_EQ(complementOf(m, a), b);
      EXPECT_EQ(complementOf(m, b), a);
    }
    for (int c : partners) EXPECT_LE(c, 1) << name;
  }
}
