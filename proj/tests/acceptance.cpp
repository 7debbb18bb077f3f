// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace media;
using namespace media::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

/// Everything the generators produce at desk scale, plus random well-graded families.
std::vector<NamedMedium> generatedCorpus() {
  std::vector<NamedMedium> out;
  out.push_back({"single state", singleStateMedium()});
  for (std::size_t k = 1; k <= 5; ++k) out.push_back({"perm " + std::to_string(k), permutationMedium(k)});
  for (std::size_t k = 0; k <= 6; ++k)
    out.push_back({"powerset " + std::to_string(k), fromWellGradedFamily(powersetFamily(k))});
  int i = 0;
  for (const auto& g : allGraphs(4)) {
    out.push_back({"acyclic g" + std::to_string(i), acyclicOrientationMedium(g)});
    out.push_back({"indep g" + std::to_string(i), independentSetMedium(g)});
    ++i;
  }
  i = 0;
  for (const auto& d : allDags(4)) out.push_back({"toporder d" + std::to_string(i++), topologicalOrderingMedium(d)});
  for (std::size_t h = 0; h <= 3; ++h) out.push_back({"btree h<=" + std::to_string(h), binaryTreeHeightMedium(h)});
  out.push_back({"btree L<=2 h<=3", binaryTreeMedium(2, 3)});
  out.push_back({"btree L<=3 h<=3", binaryTreeMedium(3, 3)});
  out.push_back({"subsets", subsetsMedium()});
  for (std::size_t u = 2; u <= 5; ++u)
    for (std::size_t k = 1; k < u; ++k)
      out.push_back({"size<=" + std::to_string(k) + " of " + std::to_string(u),
                     downwardClosedMedium(boundedSizeFamily(u, k))});
  std::mt19937_64 rng(7001);
  for (int r = 0; r < 60; ++r) {
    const std::size_t universe = 2 + rng() % 7;
    auto f = randomWellGradedFamily(rng, universe, 3 + rng() % 60);
    out.push_back({"random family " + std::to_string(r), permuteMedium(fromWellGradedFamily(f), rng)});
  }
  return out;
}

std::vector<const NamedMedium*> upTo(const std::vector<NamedMedium>& corpus, std::size_t n) {
  std::vector<const NamedMedium*> out;
  for (const auto& c : corpus)
    if (c.medium.stateCount() <= n) out.push_back(&c);
  return out;
}

Outcome axioms(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  std::size_t brute = 0;
  for (const auto& [name, m] : corpus)
    if (!verifyMedium(m).passed()) r.fail(name + " rejected");
  std::mt19937_64 rng(7002);
  for (const auto* c : upTo(corpus, oracles::kMaxAxiomStates)) {
    std::vector<Medium> variants{c->medium};
    for (int k = 0; k < 3; ++k) variants.push_back(corruptMedium(c->medium, rng));
    for (const auto& v : variants) {
      ++brute;
      if (verifyMedium(v).passed() != oracles::bruteAxiomCheck(v).passed()) r.fail(c->name + " verifier/oracle disagree");
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " media verified, " +
              std::to_string(brute) + " oracle comparisons";
  return r;
}

Outcome bounds(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  for (const auto& [name, m] : corpus) {
    const auto s = mediumStats(m);
    if (!satisfiesDensityBound(s)) r.fail(name + " violates m <= n log2 n");
    if (!satisfiesSizeBound(s)) r.fail(name + " violates n <= 2^(tau/2)");
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " media";
  return r;
}

Outcome reset(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  for (const auto& [name, m] : corpus) {
    auto res = resetSequence(m);
    if (res.word.size() + 1 != m.stateCount()) r.fail(name + " reset length");
    for (State s = 0; s < m.stateCount(); ++s)
      if (applyMessage(m, s, res.word) != res.sink) r.fail(name + " does not synchronize");
  }
  auto optimum = oracles::bruteShortestReset(subsetsMedium());
  if (!optimum || optimum->size() <= 3) r.fail("subsets medium has a reset word of length <= 3");
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("subsets optimum ") +
              (optimum ? std::to_string(optimum->size()) : "none");
  return r;
}

Outcome shortestPaths(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  std::mt19937_64 rng(7004);
  auto small = upTo(corpus, 60);
  std::vector<NamedMedium> large;
  for (std::size_t target = 45; target <= 60; ++target) {
    auto f = randomWellGradedFamily(rng, 6 + target % 3, target);
    large.push_back({"family of " + std::to_string(f.size()), permuteMedium(fromWellGradedFamily(f), rng)});
  }
  for (const auto& l : large) small.push_back(&l);
  std::shuffle(small.begin(), small.end(), rng);
  std::size_t cases = 0, negatives = 0, largest = 0;
  for (std::size_t i = 0; cases < std::max<std::size_t>(240, small.size()); ++i) {
    const auto& [name, m] = *small[i % small.size()];
    auto lengths = randomLengths(m.tokens(), rng);
    for (double v : lengths.values()) negatives += v < 0;
    auto table = allPairsShortestPaths(m, lengths);
    auto expected = oracles::bruteDistances(m, lengths);
    const auto n = m.stateCount(), tau = m.tokenCount();
    largest = std::max(largest, n);
    for (State s = 0; s < n; ++s)
      for (State q = 0; q < n; ++q)
        if (table.distance(s, q) != expected[s][q]) r.fail(name + " distance mismatch");
    if (table.scanWork() > 4 * n * (tau / 2 + 2 * n)) r.fail(name + " scan work over budget");
    ++cases;
  }
  if (negatives == 0) r.fail("no negative lengths drawn");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases, largest n = " + std::to_string(largest);
  return r;
}

Outcome complements(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  std::size_t media = 0;
  for (const auto* c : upTo(corpus, 64)) {
    const auto& m = c->medium;
    ++media;
    auto pairs = allComplementaryPairs(m);
    if (pairs != oracles::bruteComplementPairs(m)) r.fail(c->name + " pairs differ from oracle");
    std::vector<int> partners(m.stateCount(), 0);
    for (auto [a, b] : pairs) {
      ++partners[a];
      if (b != a) ++partners[b];
    }
    for (State s = 0; s < m.stateCount(); ++s) {
      if (partners[s] > 1) r.fail(c->name + " complement not unique");
      auto x = complementOf(m, s);
      if (x.has_value() != (partners[s] == 1)) r.fail(c->name + " complementOf disagrees with pair list");
      if (x && complementOf(m, *x) != s) r.fail(c->name + " complement not symmetric");
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(media) + " media";
  return r;
}

bool replaysAsViolation(const Medium& m, const Orientation& o, const ViolatingTriple& v) {
  const State s = v.state;
  if (!o.isPositive(v.first) || !o.isPositive(v.second) || v.first == v.second) return false;
  if (m.apply(s, v.first) == s || m.apply(s, v.second) == s) return false;
  const Token a[] = {v.first, v.second}, b[] = {v.second, v.first};
  return !isStepwiseEffective(m, s, a) || !isStepwiseEffective(m, s, b);
}

Outcome closedOrientations(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  std::size_t orientations = 0, scans = 0;
  for (const auto* c : upTo(corpus, 64)) {
    const auto& m = c->medium;
    for (State q = 0; q < m.stateCount(); ++q) {
      auto o = contentOrientation(m, q);
      ++orientations;
      const bool closed = isClosed(m, o);
      if (closed != oracles::bruteIsClosed(m, o)) r.fail(c->name + " isClosed differs from oracle");
      auto w = findViolatingTriple(m, o);
      if (w.has_value() == closed) r.fail(c->name + " witness presence wrong");
      if (w && !replaysAsViolation(m, o, *w)) r.fail(c->name + " witness does not replay");
    }
    if (m.tokenCount() <= oracles::kMaxScanTokens) {
      ++scans;
      if (findClosedOrientation(m).has_value() == oracles::bruteClosedScan(m).empty())
        r.fail(c->name + " findClosedOrientation disagrees with scan");
    }
  }
  if (findClosedOrientation(subsetsMedium())) r.fail("subsets medium has a closed orientation");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(orientations) + " content orientations, " +
              std::to_string(scans) + " scans";
  return r;
}

Outcome positiveCounts(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  std::size_t checked = 0;
  auto check = [&](const std::string& name, const Medium& m, const Orientation& o) {
    ++checked;
    const auto n = m.stateCount();
    for (State s = 0; s < n; ++s) {
      const auto p = positiveEffectiveCount(m, o, s);
      if (p > floorLog2(n)) r.fail(name + " p(S) above floor(log2 n)");
      for (Token t : o.positiveTokens())
        if (m.apply(s, t) != s && positiveEffectiveCount(m, o, m.apply(s, t)) + 1 < p)
          r.fail(name + " p(St) < p(S) - 1");
    }
  };
  for (const auto* c : upTo(corpus, 64)) {
    if (auto o = findClosedOrientation(c->medium)) check(c->name, c->medium, *o);
    if (c->medium.tokenCount() <= 12)
      for (const auto& o : oracles::bruteClosedScan(c->medium)) check(c->name, c->medium, o);
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(checked) + " closed orientations";
  return r;
}

/// State handle counting live copies, to observe retained memory.
struct Tracked {
  static inline long live = 0;
  static inline long peak = 0;
  State value = 0;

  Tracked() { bump(); }
  explicit Tracked(State v) : value(v) { bump(); }
  Tracked(const Tracked& o) : value(o.value) { bump(); }
  Tracked(Tracked&& o) noexcept : value(o.value) { bump(); }
  Tracked& operator=(const Tracked&) = default;
  Tracked& operator=(Tracked&&) = default;
  ~Tracked() { --live; }
  friend bool operator==(const Tracked& a, const Tracked& b) { return a.value == b.value; }
  static void bump() { peak = std::max(peak, ++live); }
};

template <typename S>
std::pair<std::size_t, std::uint64_t> countStates(BlackBoxMedium<S> box) {
  auto e = enumerateStates(std::move(box));
  std::size_t n = 0;
  while (e.next()) ++n;
  return {n, e.transitionCalls()};
}

Outcome blackBox(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  auto expectCount = [&](const char* what, std::size_t got, std::size_t want) {
    if (got != want) r.fail(std::string(what) + " gave " + std::to_string(got));
  };
  auto perm4 = permutationMedium(4);
  expectCount("perm 4", countStates(wrapExplicit(perm4)).first, 24);
  expectCount("powerset-10", countStates(setFamilyOracle(10, [](const ElementSet&) { return true; }, ElementSet(10))).first,
              1024);
  expectCount("subsets box",
              countStates(setFamilyOracle(3, [](const ElementSet& s) { return s.count() >= 1 && s.count() <= 2; },
                                          ElementSet(3, 1)))
                  .first,
              6);

  for (const auto& [name, m] : corpus) {
    auto [n, calls] = countStates(wrapExplicit(m));
    if (n != m.stateCount()) r.fail(name + " enumerated " + std::to_string(n) + " states");
    const auto tau = m.tokenCount();
    if (calls > 8 * n * tau * tau) r.fail(name + " transition calls over budget");
  }

  std::vector<long> peaks;
  for (std::size_t k : {3u, 4u, 5u, 6u}) {
    auto m = permutationMedium(k);
    Tracked::peak = Tracked::live;
    const long before = Tracked::live;
    BlackBoxMedium<Tracked> box{m.tokenCount(), [&m](const Tracked& s, Token t) { return Tracked(m.apply(s.value, t)); },
                                Tracked(0)};
    countStates(std::move(box));
    peaks.push_back(Tracked::peak - before);
  }
  if (!std::all_of(peaks.begin(), peaks.end(), [&](long p) { return p == peaks.front(); }))
    r.fail("retained states grow with n");
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("peak live states ") + std::to_string(peaks.back());
  return r;
}

Outcome blackBoxReset(const std::vector<NamedMedium>& corpus) {
  Outcome r;
  for (const auto& [name, m] : corpus) {
    auto word = blackBoxResetSequence(wrapExplicit(m));
    if (word.size() + 1 != m.stateCount()) r.fail(name + " reset length");
    const State target = applyMessage(m, 0, word);
    for (State s = 0; s < m.stateCount(); ++s)
      if (applyMessage(m, s, word) != target) r.fail(name + " does not synchronize");
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(corpus.size()) + " media";
  return r;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  const auto corpus = generatedCorpus();
  std::printf("corpus: %zu media built in %.2fs\n", corpus.size(),
              std::chrono::duration<double>(Clock::now() - start).count());

  struct Criterion {
    int number;
    const char* title;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "axioms and structure", 60, [&] { return axioms(corpus); }},
      {2, "size and density bounds", 0, [&] { return bounds(corpus); }},
      {3, "reset sequences", 10, [&] { return reset(corpus); }},
      {4, "shortest paths", 60, [&] { return shortestPaths(corpus); }},
      {5, "complements", 0, [&] { return complements(corpus); }},
      {6, "closed orientations", 120, [&] { return closedOrientations(corpus); }},
      {7, "positive-count properties", 0, [&] { return positiveCounts(corpus); }},
      {8, "black-box enumeration", 30, [&] { return blackBox(corpus); }},
      {9, "black-box reset", 0, [&] { return blackBoxReset(corpus); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) o.fail("over time limit");
    std::printf("%s criterion %d (%s): %.2fs, %s\n", o.ok ? "PASS" : "FAIL", c.number, c.title, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
