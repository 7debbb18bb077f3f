#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "media/content.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"
#include "media/two_sat.hpp"

namespace media {

/// State S with positive tokens t, t' both effective at S such that t' is not
/// effective at St (so the message t t' is not stepwise effective for S).
struct ViolatingTriple {
  State state;
  Token first;
  Token second;

  friend bool operator==(const ViolatingTriple&, const ViolatingTriple&) = default;
};

namespace detail {

inline void checkOrientation(const Medium& m, const Orientation& o) {
  if (o.size() != m.tokenCount()) throw Error("orientation does not match the medium's tokens");
}

inline std::vector<Token> positiveEffective(const Medium& m, const Orientation& o, State s) {
  std::vector<Token> out;
  for (const auto& tr : m.transitions(s))
    if (o.isPositive(tr.token)) out.push_back(tr.token);
  return out;
}

/// p > floor(log2 n), i.e. 2^p > n.
inline bool exceedsLogBound(std::size_t p, std::size_t n) { return p > floorLog2(n); }

/// First violating triple among ordered pairs of positive effective tokens,
/// states ascending, pairs ascending lexicographically.
inline std::optional<ViolatingTriple> scanTriples(const Medium& m, const Orientation& o) {
  for (State s = 0; s < m.stateCount(); ++s) {
    const auto tokens = positiveEffective(m, o, s);
    for (Token t : tokens)
      for (Token u : tokens) {
        if (t == u) continue;
        const State after = m.apply(s, t);
        if (m.apply(after, u) == after) return ViolatingTriple{s, t, u};
      }
  }
  return std::nullopt;
}

}  // namespace detail

/// p(S): number of positive tokens effective at s.
inline std::size_t positiveEffectiveCount(const Medium& m, const Orientation& o, State s) {
  detail::checkOrientation(m, o);
  return detail::positiveEffective(m, o, s).size();
}

/// O(m log n): reject as soon as some state has more than log2 n positive
/// effective tokens, otherwise test both orders of every pair at every state.
inline bool isClosed(const Medium& m, const Orientation& o) {
  detail::checkOrientation(m, o);
  const auto n = m.stateCount();
  for (State s = 0; s < n; ++s)
    if (detail::exceedsLogBound(detail::positiveEffective(m, o, s).size(), n)) return false;
  return !detail::scanTriples(m, o).has_value();
}

/// Constructive closedness test in O(m log n); empty iff the orientation is closed.
///
/// 1. A positive step S -t-> St that loses more than one positive effective
///    token yields a triple directly.
/// 2. Otherwise a state with too many positive effective tokens is walked down
///    along positive steps to one with exactly 1 + floor(log2 n); a breadth-first
///    search over subsequences of its positive tokens finds a shortest one that
///    is not stepwise effective, v t t', giving (Sv, t, t').
/// 3. Otherwise the plain triple scan.
inline std::optional<ViolatingTriple> findViolatingTriple(const Medium& m, const Orientation& o) {
  detail::checkOrientation(m, o);
  const auto n = m.stateCount();
  std::vector<std::size_t> p(n);
  for (State s = 0; s < n; ++s) p[s] = detail::positiveEffective(m, o, s).size();

  for (State s = 0; s < n; ++s) {
    for (const auto& tr : m.transitions(s)) {
      if (!o.isPositive(tr.token) || p[tr.to] + 1 >= p[s]) continue;
      for (Token u : detail::positiveEffective(m, o, s))
        if (u != tr.token && m.apply(tr.to, u) == tr.to) return ViolatingTriple{s, tr.token, u};
    }
  }

  const std::size_t target = floorLog2(n) + 1;
  for (State start = 0; start < n; ++start) {
    if (p[start] < target) continue;
    State s = start;
    while (p[s] > target) {
      // p drops by at most one per positive step here, and positive walks end at a sink.
      s = m.apply(s, detail::positiveEffective(m, o, s).front());
    }
    const auto word = detail::positiveEffective(m, o, s);

    struct Node {
      State at;
      std::size_t last;  // index into word of the last token used
      std::size_t parent;
    };
    std::vector<Node> nodes;
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < word.size(); ++i) {
      nodes.push_back({m.apply(s, word[i]), i, SIZE_MAX});
      queue.push_back(nodes.size() - 1);
    }
    while (!queue.empty()) {
      const auto id = queue.front();
      queue.pop_front();
      for (std::size_t j = nodes[id].last + 1; j < word.size(); ++j) {
        const State here = nodes[id].at;
        const State after = m.apply(here, word[j]);
        if (after == here) {
          const State before = nodes[id].parent == SIZE_MAX ? s : nodes[nodes[id].parent].at;
          return ViolatingTriple{before, word[nodes[id].last], word[j]};
        }
        nodes.push_back({after, j, id});
        queue.push_back(nodes.size() - 1);
      }
    }
    break;
  }

  return detail::scanTriples(m, o);
}

/// Closed orientation by reduction to 2-SAT in O(m tau): one variable per token
/// (true = positive), clauses t | ~t and ~t | ~~t per pair, and ~t | ~t' for
/// every S, t, t' with St and St' effective but t' ineffective at St.
inline std::optional<Orientation> findClosedOrientation(const Medium& m) {
  const auto& tokens = m.tokens();
  TwoSatInstance inst;
  inst.variables = m.tokenCount();
  for (std::size_t p = 0; p < tokens.pairCount(); ++p) {
    const auto lo = tokens.pairLow(p), hi = tokens.reverse(lo);
    inst.clauses.push_back({pos(lo), pos(hi)});
    inst.clauses.push_back({neg(lo), neg(hi)});
  }
  std::set<std::pair<Token, Token>> forbidden;
  for (State s = 0; s < m.stateCount(); ++s) {
    const auto list = m.transitions(s);
    for (const auto& a : list)
      for (const auto& b : list) {
        if (a.token == b.token) continue;
        if (m.apply(a.to, b.token) == a.to) forbidden.emplace(std::min(a.token, b.token), std::max(a.token, b.token));
      }
  }
  for (auto [a, b] : forbidden) inst.clauses.push_back({neg(a), neg(b)});

  auto solution = twoSatSolve(inst);
  if (!solution) return std::nullopt;
  return Orientation(tokens, std::move(*solution));
}

/// Stepwise-effective message from s to q whose positive tokens all come first.
/// Greedily applies the lowest needed positive token that is effective, then the
/// needed negative ones. Throws when the greedy walk gets stuck, which cannot
/// happen for a closed orientation.
inline Message canonicalMessage(const Medium& m, const Orientation& o, State s, State q) {
  detail::checkOrientation(m, o);
  const auto from = computeContent(m, s);
  const auto to = computeContent(m, q);
  std::vector<Token> needed;
  std::set_difference(to.tokens.begin(), to.tokens.end(), from.tokens.begin(), from.tokens.end(),
                      std::back_inserter(needed));

  Message w;
  State at = s;
  for (bool positivePhase : {true, false}) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto it = needed.begin(); it != needed.end(); ++it) {
        if (o.isPositive(*it) != positivePhase) continue;
        const State after = m.apply(at, *it);
        if (after == at) continue;
        w.push_back(*it);
        at = after;
        needed.erase(it);
        progress = true;
        break;
      }
    }
  }
  if (!needed.empty() || at != q) throw Error("canonical message: orientation is not closed");
  return w;
}

}  // namespace media
