#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "media/medium.hpp"
#include "media/orientation.hpp"

namespace media {

/// The content of a state: the tokens occurring on straight paths into it.
struct ContentSet {
  State owner = 0;
  std::vector<Token> tokens;  // ascending

  bool contains(Token t) const { return std::binary_search(tokens.begin(), tokens.end(), t); }
  std::size_t size() const { return tokens.size(); }

  friend bool operator==(const ContentSet&, const ContentSet&) = default;
};

namespace detail {

/// Unweighted BFS distances from `root` along listed transitions; kNoState marks
/// unreachable states.
inline std::vector<State> bfsDistances(const Medium& m, State root) {
  std::vector<State> dist(m.stateCount(), kNoState);
  std::deque<State> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (const auto& tr : m.transitions(s)) {
      if (dist[tr.to] == kNoState) {
        dist[tr.to] = dist[s] + 1;
        queue.push_back(tr.to);
      }
    }
  }
  return dist;
}

/// Token membership of the content of q by the distance characterization: t is in
/// the content iff some listed transition A -t-> B moves one step closer to q.
inline std::vector<char> contentMembership(const Medium& m, State q) {
  const auto dist = bfsDistances(m, q);
  std::vector<char> member(m.tokenCount(), 0);
  for (State a = 0; a < m.stateCount(); ++a) {
    if (dist[a] == kNoState) throw Error("content: state " + std::to_string(a) + " cannot reach the target");
    for (const auto& tr : m.transitions(a))
      if (dist[tr.to] + 1 == dist[a]) member[tr.token] = 1;
  }
  return member;
}

/// Index of the first reverse pair that does not have exactly one member, if any.
inline std::optional<std::size_t> brokenPair(const TokenTable& tokens, const std::vector<char>& member) {
  for (std::size_t p = 0; p < tokens.pairCount(); ++p) {
    const Token lo = tokens.pairLow(p);
    if ((member[lo] != 0) == (member[tokens.reverse(lo)] != 0)) return p;
  }
  return std::nullopt;
}

inline ContentSet toContentSet(State owner, const std::vector<char>& member) {
  ContentSet c{owner, {}};
  for (Token t = 0; t < member.size(); ++t)
    if (member[t]) c.tokens.push_back(t);
  return c;
}

}  // namespace detail

/// Content of q in O(n + m): one BFS from q, then one scan of all transitions.
inline ContentSet computeContent(const Medium& m, State q) {
  m.checkState(q);
  const auto member = detail::contentMembership(m, q);
  if (auto p = detail::brokenPair(m.tokens(), member)) {
    const Token lo = m.tokens().pairLow(*p);
    throw Error("content: not a medium, pair " + m.tokens().name(lo) + "/" + m.tokens().name(m.tokens().reverse(lo)) +
                " is not split by the content of state " + std::to_string(q));
  }
  return detail::toContentSet(q, member);
}

/// Contents of every state as an n x tau membership table.
///
/// The content of state 0 comes from computeContent(); the rest are propagated
/// along a BFS tree using content(St) = content(S) - {reverse t} + {t}. Exact for
/// verified media; O(n tau + m).
class ContentTable {
 public:
  explicit ContentTable(const Medium& m) : states_(m.stateCount()), tokens_(m.tokenCount()), bits_(states_ * tokens_, 0) {
    const auto root = computeContent(m, 0);
    for (Token t : root.tokens) bits_[t] = 1;

    std::vector<char> seen(states_, 0);
    std::deque<State> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const State s = queue.front();
      queue.pop_front();
      for (const auto& tr : m.transitions(s)) {
        if (seen[tr.to]) continue;
        seen[tr.to] = 1;
        std::copy_n(bits_.begin() + s * tokens_, tokens_, bits_.begin() + tr.to * tokens_);
        bits_[tr.to * tokens_ + m.tokens().reverse(tr.token)] = 0;
        bits_[tr.to * tokens_ + tr.token] = 1;
        queue.push_back(tr.to);
      }
    }
  }

  std::size_t stateCount() const { return states_; }
  std::size_t tokenCount() const { return tokens_; }

  bool contains(State s, Token t) const { return bits_[s * tokens_ + t] != 0; }

  ContentSet content(State s) const {
    ContentSet c{s, {}};
    for (Token t = 0; t < tokens_; ++t)
      if (contains(s, t)) c.tokens.push_back(t);
    return c;
  }

 private:
  std::size_t states_;
  std::size_t tokens_;
  std::vector<char> bits_;
};

/// Orientation whose positive tokens are exactly content(q).
inline Orientation contentOrientation(const Medium& m, State q) {
  return Orientation::fromPositiveSet(m.tokens(), computeContent(m, q).tokens);
}

}  // namespace media
