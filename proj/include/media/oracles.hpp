#pragma once

// Brute-force references for the algorithms in this library. They share nothing
// with the code they check beyond the Medium/TokenTable/Orientation types and
// computeContent, and they refuse inputs above their size guards.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "media/content.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"

namespace media::oracles {

inline constexpr std::size_t kMaxAxiomStates = 12;
inline constexpr std::size_t kMaxContentStates = 12;
inline constexpr std::size_t kMaxResetStates = 8;
inline constexpr std::size_t kMaxScanTokens = 16;

inline void requireAtMost(std::size_t value, std::size_t limit, const char* what) {
  if (value > limit) throw Error(std::string("oracle guard: ") + what + " exceeds " + std::to_string(limit));
}

namespace detail {

inline std::vector<State> fullTable(const Medium& m) {
  const auto n = m.stateCount(), tau = m.tokenCount();
  std::vector<State> next(n * tau);
  for (State s = 0; s < n; ++s)
    for (Token t = 0; t < tau; ++t) next[s * tau + t] = m.apply(s, t);
  return next;
}

/// Calls visit(start, end, tokensUsedMask, consistent, vacuous, message) for every
/// stepwise-effective message of length <= maxLength from every start state.
/// With consistentOnly, inconsistent prefixes are not extended.
inline void forEachWalk(const Medium& m, std::size_t maxLength,
                        const std::function<void(State, State, std::uint64_t, bool, bool, const Message&)>& visit,
                        bool consistentOnly = false) {
  const auto tau = m.tokenCount();
  const auto& tokens = m.tokens();
  const auto next = fullTable(m);
  std::vector<int> net(tau, 0);
  std::vector<int> uses(tau, 0);
  Message word;

  std::function<void(State, State, int, std::uint64_t)> walk = [&](State start, State at, int conflicts,
                                                                   std::uint64_t mask) {
    const bool vacuous = std::all_of(net.begin(), net.end(), [](int c) { return c == 0; });
    visit(start, at, mask, conflicts == 0, vacuous, word);
    if (word.size() >= maxLength) return;
    for (Token t = 0; t < tau; ++t) {
      const State to = next[at * tau + t];
      if (to == at) continue;
      const Token r = tokens.reverse(t);
      const int added = (uses[t] == 0 && uses[r] > 0) ? 1 : 0;
      if (consistentOnly && added) continue;
      ++uses[t];
      ++net[t];
      --net[r];
      word.push_back(t);
      walk(start, to, conflicts + added, mask | (std::uint64_t{1} << t));
      word.pop_back();
      --uses[t];
      --net[t];
      ++net[r];
    }
  };
  for (State s = 0; s < m.stateCount(); ++s) walk(s, s, 0, 0);
}

}  // namespace detail

struct AxiomReport {
  bool wellFormed = true;  // deterministic listing of effective transitions only
  bool axiom1 = true;      // every token has a unique reverse (the declared one)
  bool axiom2 = true;      // consistent messages connect all pairs
  bool axiom3 = true;      // stepwise-effective w returns iff vacuous
  bool axiom4 = true;      // straight paths into a common state combine consistently

  bool passed() const { return wellFormed && axiom1 && axiom2 && axiom3 && axiom4; }
};

/// Literal axiom check with messages quantified up to length n. Any
/// non-vacuous closed walk decomposes into cycles of length <= n, one of which
/// is non-vacuous, so that bound covers the "only if" half of axiom 3.
inline AxiomReport bruteAxiomCheck(const Medium& m) {
  requireAtMost(m.stateCount(), kMaxAxiomStates, "state count");
  requireAtMost(m.tokenCount(), 64, "token count");
  const auto n = m.stateCount(), tau = m.tokenCount();
  AxiomReport report;

  for (State s = 0; s < n; ++s) {
    const auto list = m.transitions(s);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].to == s) report.wellFormed = false;
      if (i > 0 && list[i].token == list[i - 1].token) report.wellFormed = false;
    }
  }

  const auto next = detail::fullTable(m);
  for (Token t = 0; t < tau; ++t) {
    std::vector<Token> reverses;
    for (Token r = 0; r < tau; ++r) {
      bool ok = true;
      for (State s = 0; s < n && ok; ++s)
        for (State q = 0; q < n && ok; ++q)
          if (s != q && (next[s * tau + t] == q) != (next[q * tau + r] == s)) ok = false;
      if (ok) reverses.push_back(r);
    }
    if (reverses.size() != 1 || reverses.front() != m.tokens().reverse(t)) report.axiom1 = false;
  }

  std::vector<char> reach(n * n, 0);
  std::vector<std::set<std::uint64_t>> arriving(n);
  detail::forEachWalk(m, n, [&](State start, State end, std::uint64_t mask, bool consistent, bool vacuous,
                                const Message&) {
    if ((end == start) != vacuous) report.axiom3 = false;
    if (consistent) {
      reach[start * n + end] = 1;
      arriving[end].insert(mask);
    }
  });
  for (State s = 0; s < n; ++s)
    for (State q = 0; q < n; ++q)
      if (!reach[s * n + q]) report.axiom2 = false;

  auto hasPair = [&](std::uint64_t mask) {
    for (std::size_t p = 0; p < m.tokens().pairCount(); ++p) {
      const Token lo = m.tokens().pairLow(p);
      if (((mask >> lo) & 1u) && ((mask >> m.tokens().reverse(lo)) & 1u)) return true;
    }
    return false;
  };
  for (State x = 0; x < n && report.axiom4; ++x)
    for (auto a : arriving[x])
      for (auto b : arriving[x])
        if (hasPair(a | b)) report.axiom4 = false;
  return report;
}

/// Union of the tokens of every consistent stepwise-effective message into q.
inline ContentSet bruteContent(const Medium& m, State q) {
  requireAtMost(m.stateCount(), kMaxContentStates, "state count");
  requireAtMost(m.tokenCount(), 64, "token count");
  m.checkState(q);
  std::uint64_t mask = 0;
  detail::forEachWalk(m, m.stateCount(), [&](State, State end, std::uint64_t used, bool consistent, bool,
                                             const Message&) {
    if (consistent && end == q) mask |= used;
  }, true);
  ContentSet c{q, {}};
  for (Token t = 0; t < m.tokenCount(); ++t)
    if ((mask >> t) & 1u) c.tokens.push_back(t);
  return c;
}

/// Bellman-Ford from every source over the transition graph.
inline std::vector<std::vector<double>> bruteDistances(const Medium& m, const LengthFunction& lengths) {
  if (lengths.size() != m.tokenCount()) throw Error("length function does not match the medium's tokens");
  const auto n = m.stateCount();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  for (State src = 0; src < n; ++src) {
    auto& d = dist[src];
    d[src] = 0.0;
    for (std::size_t round = 0; round + 1 < n; ++round) {
      bool changed = false;
      for (State u = 0; u < n; ++u) {
        if (d[u] == kInf) continue;
        for (const auto& tr : m.transitions(u))
          if (d[u] + lengths(tr.token) < d[tr.to]) {
            d[tr.to] = d[u] + lengths(tr.token);
            changed = true;
          }
      }
      if (!changed) break;
    }
  }
  return dist;
}

/// Minimum-length reset word by BFS over sets of possible current states.
inline std::optional<Message> bruteShortestReset(const Medium& m) {
  requireAtMost(m.stateCount(), kMaxResetStates, "state count");
  const auto n = m.stateCount(), tau = m.tokenCount();
  const auto next = detail::fullTable(m);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::pair<std::uint32_t, Token>> parent(full + 1, {0, kNoToken});
  std::vector<char> seen(full + 1, 0);
  std::deque<std::uint32_t> queue{full};
  seen[full] = 1;
  while (!queue.empty()) {
    const auto set = queue.front();
    queue.pop_front();
    if (std::popcount(set) == 1) {
      Message word;
      for (auto at = set; at != full; at = parent[at].first) word.push_back(parent[at].second);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (Token t = 0; t < tau; ++t) {
      std::uint32_t image = 0;
      for (State s = 0; s < n; ++s)
        if ((set >> s) & 1u) image |= std::uint32_t{1} << next[s * tau + t];
      if (!seen[image]) {
        seen[image] = 1;
        parent[image] = {set, t};
        queue.push_back(image);
      }
    }
  }
  return std::nullopt;
}

/// Closedness by definition: tt' and t't stepwise effective for every state and
/// every two positive tokens effective there.
inline bool bruteIsClosed(const Medium& m, const Orientation& o) {
  for (State s = 0; s < m.stateCount(); ++s)
    for (Token t = 0; t < m.tokenCount(); ++t)
      for (Token u = 0; u < m.tokenCount(); ++u) {
        if (t == u || !o.isPositive(t) || !o.isPositive(u)) continue;
        if (m.apply(s, t) == s || m.apply(s, u) == s) continue;
        const Message tu{t, u}, ut{u, t};
        if (!isStepwiseEffective(m, s, tu) || !isStepwiseEffective(m, s, ut)) return false;
      }
  return true;
}

/// Every closed orientation, by testing all 2^(tau/2) of them.
inline std::vector<Orientation> bruteClosedScan(const Medium& m) {
  requireAtMost(m.tokenCount(), kMaxScanTokens, "token count");
  const auto& tokens = m.tokens();
  const auto pairs = tokens.pairCount();
  std::vector<Orientation> closed;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    std::vector<bool> positive(tokens.size(), false);
    for (std::size_t p = 0; p < pairs; ++p) {
      const Token lo = tokens.pairLow(p);
      positive[((mask >> p) & 1u) ? lo : tokens.reverse(lo)] = true;
    }
    Orientation o(tokens, std::move(positive));
    if (bruteIsClosed(m, o)) closed.push_back(std::move(o));
  }
  return closed;
}

/// Complementary pairs {a, b}, a <= b, by intersecting every pair of contents.
inline std::vector<std::pair<State, State>> bruteComplementPairs(const Medium& m) {
  const auto n = m.stateCount();
  std::vector<ContentSet> contents;
  for (State s = 0; s < n; ++s) contents.push_back(computeContent(m, s));
  std::vector<std::pair<State, State>> pairs;
  for (State a = 0; a < n; ++a)
    for (State b = a; b < n; ++b) {
      std::vector<Token> both;
      std::set_intersection(contents[a].tokens.begin(), contents[a].tokens.end(), contents[b].tokens.begin(),
                            contents[b].tokens.end(), std::back_inserter(both));
      if (both.empty()) pairs.emplace_back(a, b);
    }
  return pairs;
}

}  // namespace media::oracles
