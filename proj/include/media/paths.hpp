#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "media/content.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"

namespace media {

/// S -> Q whenever St = Q != S for a positive token t.
struct Arc {
  State from;
  State to;
  Token token;

  friend bool operator==(const Arc&, const Arc&) = default;
};

inline std::vector<Arc> contentDag(const Medium& m, const Orientation& o) {
  if (o.size() != m.tokenCount()) throw Error("orientation does not match the medium's tokens");
  std::vector<Arc> arcs;
  for (State s = 0; s < m.stateCount(); ++s)
    for (const auto& tr : m.transitions(s))
      if (o.isPositive(tr.token)) arcs.push_back({s, tr.to, tr.token});
  return arcs;
}

struct ResetResult {
  Message word;
  State sink = 0;
};

/// Reset sequence of length n - 1 synchronizing every state to state 0, in O(m).
///
/// Orients the medium by the content of state 0, orders states topologically
/// (reverse depth-first finish order, starting from states in ascending order and
/// following transitions in token order), and emits for every state but the last
/// its lowest-indexed positive effective token.
inline ResetResult resetSequence(const Medium& m) {
  const State sink = 0;
  const auto n = m.stateCount();
  const auto positive = contentOrientation(m, sink);

  std::vector<State> finish;
  finish.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<State, std::size_t>> stack;
  for (State root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      const auto list = m.transitions(s);
      while (next < list.size() && (!positive.isPositive(list[next].token) || seen[list[next].to])) ++next;
      if (next == list.size()) {
        finish.push_back(s);
        stack.pop_back();
        continue;
      }
      const State child = list[next++].to;
      seen[child] = 1;
      stack.emplace_back(child, 0);
    }
  }
  std::reverse(finish.begin(), finish.end());

  ResetResult result{{}, sink};
  result.word.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const State s = finish[i];
    Token chosen = kNoToken;
    for (const auto& tr : m.transitions(s))
      if (positive.isPositive(tr.token)) {
        chosen = tr.token;
        break;
      }
    if (chosen == kNoToken) throw Error("reset sequence: state " + m.stateName(s) + " has no positive step");
    result.word.push_back(chosen);
  }
  return result;
}

namespace detail {

inline void checkLengths(const Medium& m, const LengthFunction& lengths) {
  if (lengths.size() != m.tokenCount()) throw Error("length function does not match the medium's tokens");
}

/// Distances along the content orientation of `anchor`. With toAnchor, d[S] is
/// the length of a straight path S -> anchor; otherwise anchor -> S.
inline std::vector<double> anchoredDistances(const Medium& m, const LengthFunction& lengths, State anchor,
                                             bool toAnchor) {
  checkLengths(m, lengths);
  m.checkState(anchor);
  const auto content = computeContent(m, anchor);
  std::vector<char> inContent(m.tokenCount(), 0);
  for (Token t : content.tokens) inContent[t] = 1;

  // BFS from the anchor; every transition used moves one step away along the
  // unique pair it flips, so the walk back is straight.
  std::vector<double> dist(m.stateCount(), 0.0);
  std::vector<char> seen(m.stateCount(), 0);
  std::deque<State> queue{anchor};
  seen[anchor] = 1;
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (const auto& tr : m.transitions(s)) {
      if (seen[tr.to] || inContent[tr.token]) continue;
      seen[tr.to] = 1;
      // tr.to -> s uses reverse(tr.token), a positive token of the anchor's content.
      dist[tr.to] = dist[s] + (toAnchor ? lengths(m.tokens().reverse(tr.token)) : lengths(tr.token));
      queue.push_back(tr.to);
    }
  }
  return dist;
}

}  // namespace detail

/// d(S, q) for every S, in O(m).
inline std::vector<double> distancesToState(const Medium& m, const LengthFunction& lengths, State q) {
  return detail::anchoredDistances(m, lengths, q, true);
}

/// d(s, Q) for every Q, in O(m).
inline std::vector<double> singleSourceDistances(const Medium& m, const LengthFunction& lengths, State s) {
  return detail::anchoredDistances(m, lengths, s, false);
}

/// Distances and first steps of straight paths between every ordered pair of states.
class ApspTable {
 public:
  ApspTable(std::size_t n) : n_(n), dist_(n * n, 0.0), first_(n * n, kNoToken) {}

  std::size_t stateCount() const { return n_; }
  double distance(State from, State to) const { return dist_.at(index(from, to)); }
  /// A token effective at `from` lying on a straight path to `to`; kNoToken on the diagonal.
  Token firstToken(State from, State to) const { return first_.at(index(from, to)); }

  /// Sequential-search steps spent re-pointing states during construction.
  std::uint64_t scanWork() const { return scanWork_; }

 private:
  friend ApspTable allPairsShortestPaths(const Medium&, const LengthFunction&);
  std::size_t index(State from, State to) const {
    if (from >= n_ || to >= n_) throw std::out_of_range("state index out of range");
    return static_cast<std::size_t>(from) * n_ + to;
  }

  std::size_t n_;
  std::vector<double> dist_;
  std::vector<Token> first_;
  std::uint64_t scanWork_ = 0;
};

namespace detail {

/// Token sequence of a depth-first walk from state 0 that stops once every
/// state has been reached (at most 2n - 3 moves for n >= 2).
inline Message depthFirstWalk(const Medium& m) {
  const auto n = m.stateCount();
  Message walk;
  std::vector<char> seen(n, 0);
  std::size_t reached = 1;
  seen[0] = 1;
  struct Frame {
    State state;
    std::size_t next;
    Token entry;
  };
  std::vector<Frame> stack{{0, 0, kNoToken}};
  while (reached < n) {
    auto& top = stack.back();
    const auto list = m.transitions(top.state);
    while (top.next < list.size() && seen[list[top.next].to]) ++top.next;
    if (top.next == list.size()) {
      const Token back = m.tokens().reverse(top.entry);
      stack.pop_back();
      walk.push_back(back);
      continue;
    }
    const auto& tr = list[top.next++];
    seen[tr.to] = 1;
    ++reached;
    walk.push_back(tr.token);
    stack.push_back({tr.to, 0, tr.token});
  }
  return walk;
}

}  // namespace detail

/// All-pairs distances in O(n^2).
///
/// A target state Q walks the medium depth-first. A linked list L holds one node
/// per token of the content of Q; every other state S points at the first node
/// of L whose token is effective for S (a first step of a straight path S -> Q)
/// and sits in that node's bucket. Moving Q by t removes the node of reverse(t),
/// appends a node for t, and re-points the displaced states by scanning forward
/// from the removed node, so no state ever scans a node twice. Table rows for Q
/// are recorded on its first visit; distances follow the pointer tree.
inline ApspTable allPairsShortestPaths(const Medium& m, const LengthFunction& lengths) {
  detail::checkLengths(m, lengths);
  const auto n = m.stateCount();
  const auto tau = m.tokenCount();
  const auto& tokens = m.tokens();

  ApspTable table(n);

  std::vector<State> next(n * tau);
  for (State s = 0; s < n; ++s) {
    for (Token t = 0; t < tau; ++t) next[s * tau + t] = s;
    for (const auto& tr : m.transitions(s)) next[s * tau + tr.token] = tr.to;
  }
  auto effective = [&](State s, Token t) { return next[static_cast<std::size_t>(s) * tau + t] != s; };

  constexpr std::uint32_t kNil = UINT32_MAX;
  struct Node {
    Token token;
    std::uint32_t prev;
    std::uint32_t next;
    std::vector<State> bucket;
  };
  std::vector<Node> nodes;
  nodes.reserve(tau / 2 + 2 * n);
  std::vector<std::uint32_t> nodeOf(tau, kNil);  // live node of a token in the current content
  std::uint32_t head = kNil, tail = kNil;

  auto append = [&](Token t) {
    const auto id = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({t, tail, kNil, {}});
    if (tail == kNil) head = id;
    else nodes[tail].next = id;
    tail = id;
    nodeOf[t] = id;
    return id;
  };
  auto unlink = [&](std::uint32_t id) {
    auto& node = nodes[id];
    if (node.prev == kNil) head = node.next;
    else nodes[node.prev].next = node.next;
    if (node.next == kNil) tail = node.prev;
    else nodes[node.next].prev = node.prev;
    nodeOf[node.token] = kNil;
  };

  std::vector<std::uint32_t> pointer(n, kNil);
  std::uint64_t work = 0;
  auto seek = [&](State s, std::uint32_t from) {
    std::uint32_t at = from;
    while (at != kNil) {
      ++work;
      if (effective(s, nodes[at].token)) break;
      at = nodes[at].next;
    }
    if (at == kNil) throw Error("all-pairs shortest paths: state " + m.stateName(s) + " has no straight step");
    pointer[s] = at;
    nodes[at].bucket.push_back(s);
  };

  State target = 0;
  for (Token t : computeContent(m, target).tokens) append(t);
  for (State s = 0; s < n; ++s)
    if (s != target) seek(s, head);

  std::vector<char> recorded(n, 0);
  std::vector<char> resolved(n, 0);
  std::vector<State> chain;
  auto record = [&](State q) {
    recorded[q] = 1;
    std::fill(resolved.begin(), resolved.end(), 0);
    resolved[q] = 1;
    for (State s = 0; s < n; ++s) {
      if (s != q) table.first_[table.index(s, q)] = nodes[pointer[s]].token;
    }
    table.dist_[table.index(q, q)] = 0.0;
    for (State s = 0; s < n; ++s) {
      State at = s;
      while (!resolved[at]) {
        chain.push_back(at);
        at = next[static_cast<std::size_t>(at) * tau + nodes[pointer[at]].token];
      }
      while (!chain.empty()) {
        const State c = chain.back();
        chain.pop_back();
        const Token step = nodes[pointer[c]].token;
        const State after = next[static_cast<std::size_t>(c) * tau + step];
        table.dist_[table.index(c, q)] = lengths(step) + table.dist_[table.index(after, q)];
        resolved[c] = 1;
      }
    }
  };

  record(target);
  for (Token t : detail::depthFirstWalk(m)) {
    const State moved = next[static_cast<std::size_t>(target) * tau + t];
    const std::uint32_t removed = nodeOf[tokens.reverse(t)];
    if (removed == kNil) throw Error("all-pairs shortest paths: walk token reverse missing from the content");
    const std::uint32_t resume = nodes[removed].next;
    unlink(removed);
    const std::uint32_t fresh = append(t);

    auto displaced = std::move(nodes[removed].bucket);
    nodes[removed].bucket.clear();
    std::sort(displaced.begin(), displaced.end());
    for (State s : displaced) {
      if (s == moved) continue;
      seek(s, resume == kNil ? fresh : resume);
    }
    pointer[moved] = kNil;
    pointer[target] = fresh;
    nodes[fresh].bucket.push_back(target);
    target = moved;
    if (!recorded[target]) record(target);
  }
  table.scanWork_ = work;
  return table;
}

/// Follows first-step pointers; O(|w|).
inline Message straightPathBetween(const Medium& m, const ApspTable& table, State s, State q) {
  if (table.stateCount() != m.stateCount()) throw Error("table was built for a different medium");
  Message w;
  while (s != q) {
    const Token t = table.firstToken(s, q);
    w.push_back(t);
    s = m.apply(s, t);
    if (w.size() > m.tokenCount()) throw Error("straight path: table does not describe this medium");
  }
  return w;
}

/// The state whose content is disjoint from content(s): the unique state at
/// unweighted distance tau/2 from s, confirmed by content intersection. O(m + tau).
inline std::optional<State> complementOf(const Medium& m, State s) {
  m.checkState(s);
  const auto dist = detail::bfsDistances(m, s);
  const auto half = m.tokenCount() / 2;
  for (State q = 0; q < m.stateCount(); ++q) {
    if (dist[q] != half) continue;
    const auto a = computeContent(m, s);
    const auto b = computeContent(m, q);
    for (Token t : a.tokens)
      if (b.contains(t)) return std::nullopt;
    return q;
  }
  return std::nullopt;
}

/// Every complementary pair {a, b} once with a <= b, ascending, in O(n tau).
///
/// Q walks the medium depth-first while a companion S and the list L of tokens
/// in content(Q) n content(S) are maintained; S greedily moves by reverse(t') for
/// any t' in L that allows it. L empty means S is the complement of Q.
inline std::vector<std::pair<State, State>> allComplementaryPairs(const Medium& m) {
  const auto n = m.stateCount();
  const auto tau = m.tokenCount();
  const auto& tokens = m.tokens();
  const ContentTable contents(m);

  std::vector<State> next(n * tau);
  for (State s = 0; s < n; ++s) {
    for (Token t = 0; t < tau; ++t) next[s * tau + t] = s;
    for (const auto& tr : m.transitions(s)) next[s * tau + tr.token] = tr.to;
  }

  State q = 0;
  State companion = 0;
  std::vector<Token> common = contents.content(q).tokens;
  std::vector<char> inCommon(tau, 0);
  for (Token t : common) inCommon[t] = 1;

  auto settle = [&]() {
    bool moved = true;
    while (moved && !common.empty()) {
      moved = false;
      for (std::size_t i = 0; i < common.size(); ++i) {
        const Token t = common[i];
        const State after = next[static_cast<std::size_t>(companion) * tau + tokens.reverse(t)];
        if (after == companion) continue;
        companion = after;
        inCommon[t] = 0;
        common.erase(common.begin() + static_cast<std::ptrdiff_t>(i));
        moved = true;
        break;
      }
    }
  };

  std::vector<State> complement(n, kNoState);
  std::vector<char> visited(n, 0);
  auto visit = [&]() {
    if (visited[q]) return;
    visited[q] = 1;
    if (common.empty()) complement[q] = companion;
  };

  settle();
  visit();
  for (Token t : detail::depthFirstWalk(m)) {
    q = next[static_cast<std::size_t>(q) * tau + t];
    const Token gone = tokens.reverse(t);
    if (inCommon[gone]) {
      inCommon[gone] = 0;
      common.erase(std::find(common.begin(), common.end(), gone));
    }
    if (contents.contains(companion, t) && !inCommon[t]) {
      inCommon[t] = 1;
      common.push_back(t);
    }
    settle();
    visit();
  }

  std::vector<std::pair<State, State>> pairs;
  for (State a = 0; a < n; ++a)
    if (complement[a] != kNoState && a <= complement[a]) pairs.emplace_back(a, complement[a]);
  return pairs;
}

}  // namespace media
