#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "media/token_table.hpp"
#include "media/types.hpp"

namespace media {

/// One listed (effective) transition out of a state.
struct Transition {
  Token token;
  State to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A finite state/token system stored as adjacency lists of effective transitions.
///
/// Construction only checks that indices are in range; whether the system is
/// actually a medium is the job of verifyMedium(). All algorithms in this library
/// assume a verified medium unless stated otherwise. Values are immutable.
class Medium {
 public:
  Medium(TokenTable tokens, std::vector<std::vector<Transition>> adjacency,
         std::vector<std::string> stateLabels = {})
      : tokens_(std::move(tokens)), labels_(std::move(stateLabels)) {
    const auto n = adjacency.size();
    if (n == 0) throw Error("medium: at least one state is required");
    if (!labels_.empty() && labels_.size() != n) throw Error("medium: state label count does not match state count");
    if (labels_.empty()) labels_.resize(n);

    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (State s = 0; s < n; ++s) {
      auto& list = adjacency[s];
      for (const auto& tr : list) {
        if (tr.token >= tokens_.size())
          throw Error("medium: state " + std::to_string(s) + " lists out-of-range token " + std::to_string(tr.token));
        if (tr.to >= n)
          throw Error("medium: state " + std::to_string(s) + " lists out-of-range target " + std::to_string(tr.to));
      }
      std::sort(list.begin(), list.end());
      transitions_.insert(transitions_.end(), list.begin(), list.end());
      offsets_.push_back(transitions_.size());
    }
  }

  std::size_t stateCount() const { return offsets_.size() - 1; }
  std::size_t tokenCount() const { return tokens_.size(); }
  std::size_t transitionCount() const { return transitions_.size(); }

  const TokenTable& tokens() const { return tokens_; }

  /// Listed transitions of s, sorted by token.
  std::span<const Transition> transitions(State s) const {
    checkState(s);
    return {transitions_.data() + offsets_[s], transitions_.data() + offsets_[s + 1]};
  }

  const std::string& stateLabel(State s) const { return labels_.at(s); }
  std::string stateName(State s) const { return labels_.at(s).empty() ? std::to_string(s) : labels_[s]; }
  const std::vector<std::string>& stateLabels() const { return labels_; }

  /// St: the listed target, or s itself when t is ineffective.
  State apply(State s, Token t) const {
    checkState(s);
    checkToken(t);
    auto list = transitions(s);
    auto it = std::lower_bound(list.begin(), list.end(), t,
                               [](const Transition& tr, Token tok) { return tr.token < tok; });
    return (it != list.end() && it->token == t) ? it->to : s;
  }

  void checkState(State s) const {
    if (s >= stateCount()) throw std::out_of_range("state index " + std::to_string(s) + " out of range");
  }
  void checkToken(Token t) const {
    if (t >= tokenCount()) throw std::out_of_range("token index " + std::to_string(t) + " out of range");
  }

  friend bool operator==(const Medium& a, const Medium& b) {
    return a.tokens_ == b.tokens_ && a.offsets_ == b.offsets_ && a.transitions_ == b.transitions_ &&
           a.labels_ == b.labels_;
  }

 private:
  TokenTable tokens_;
  std::vector<std::size_t> offsets_;
  std::vector<Transition> transitions_;
  std::vector<std::string> labels_;
};

inline State applyToken(const Medium& m, State s, Token t) { return m.apply(s, t); }

inline State applyMessage(const Medium& m, State s, std::span<const Token> w) {
  m.checkState(s);
  for (Token t : w) s = m.apply(s, t);
  return s;
}

inline void checkMessage(const Medium& m, std::span<const Token> w) {
  for (Token t : w) m.checkToken(t);
}

/// True when w contains no token together with its reverse.
inline bool isConsistent(const Medium& m, std::span<const Token> w) {
  checkMessage(m, w);
  std::vector<char> present(m.tokenCount(), 0);
  for (Token t : w) present[t] = 1;
  return std::none_of(w.begin(), w.end(), [&](Token t) { return present[m.tokens().reverse(t)] != 0; });
}

/// True when every token occurs as often as its reverse.
inline bool isVacuous(const Medium& m, std::span<const Token> w) {
  checkMessage(m, w);
  std::vector<long> net(m.tokens().pairCount(), 0);
  for (Token t : w) net[m.tokens().pairOf(t)] += (m.tokens().pairLow(m.tokens().pairOf(t)) == t) ? 1 : -1;
  return std::all_of(net.begin(), net.end(), [](long c) { return c == 0; });
}

/// True when each successive token of w changes the current state.
inline bool isStepwiseEffective(const Medium& m, State s, std::span<const Token> w) {
  m.checkState(s);
  for (Token t : w) {
    const State next = m.apply(s, t);
    if (next == s) return false;
    s = next;
  }
  return true;
}

/// Tokens effective at s, ascending.
inline std::vector<Token> effectiveTokens(const Medium& m, State s) {
  std::vector<Token> out;
  for (const auto& tr : m.transitions(s))
    if (tr.to != s && (out.empty() || out.back() != tr.token)) out.push_back(tr.token);
  return out;
}

struct MediumStats {
  std::size_t states = 0;       // n
  std::size_t tokens = 0;       // tau
  std::size_t transitions = 0;  // m

  friend bool operator==(const MediumStats&, const MediumStats&) = default;
};

inline MediumStats mediumStats(const Medium& m) {
  return {m.stateCount(), m.tokenCount(), m.transitionCount()};
}

/// floor(log2 n) for n >= 1.
inline unsigned floorLog2(std::size_t n) { return static_cast<unsigned>(std::bit_width(n)) - 1; }

/// m <= n log2 n.
inline bool satisfiesDensityBound(const MediumStats& s) {
  if (s.states <= 1) return s.transitions == 0;
  return static_cast<double>(s.transitions) <= static_cast<double>(s.states) * std::log2(static_cast<double>(s.states));
}

/// n <= 2^(tau/2), evaluated exactly.
inline bool satisfiesSizeBound(const MediumStats& s) {
  const std::size_t half = s.tokens / 2;
  if (half >= 63) return true;
  return s.states <= (std::size_t{1} << half);
}

}  // namespace media
