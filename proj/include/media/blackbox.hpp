#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "media/medium.hpp"
#include "media/set_family.hpp"

namespace media {

/// State representations must be copyable and comparable for equality; the
/// enumerator never looks inside them.
template <typename S>
concept OpaqueState = std::copyable<S> && std::equality_comparable<S>;

/// A medium given only by its token count, a transition oracle and one state.
template <OpaqueState S>
struct BlackBoxMedium {
  std::size_t tokenCount = 0;
  std::function<S(const S&, Token)> transition;
  S seed;
};

/// Reverse search over the canonical path tree of a black-box medium.
///
/// Canonical step from a state: the first token in the discovered positive list
/// that is effective for it. A neighbour reached by an effective, not yet
/// positive token is a child iff its canonical step leads back. Only the
/// current state, a token cursor and the positive list are retained between
/// pulls; no set of visited states is kept.
template <OpaqueState S>
class ReverseSearch {
 public:
  /// One traversal event: a newly reached state, or a return to the parent by
  /// the given (positive) token.
  struct Visit {
    S state;
  };
  struct Return {
    Token token;
  };
  using Event = std::variant<Visit, Return>;

  explicit ReverseSearch(BlackBoxMedium<S> medium) : medium_(std::move(medium)), state_(medium_.seed) {
    positive_.reserve(medium_.tokenCount / 2);
    isPositive_.assign(medium_.tokenCount, 0);
  }

  /// Next event, or nothing once the traversal is complete.
  std::optional<Event> advance() {
    if (!started_) {
      started_ = true;
      return Event{Visit{state_}};
    }
    if (done_) return std::nullopt;

    const auto tau = medium_.tokenCount;
    while (cursor_ < tau) {
      const Token token = static_cast<Token>(cursor_++);
      if (isPositive_[token]) continue;
      S neighbour = call(state_, token);
      if (neighbour == state_) continue;

      for (Token inverse = 0; inverse < tau; ++inverse)
        if (call(neighbour, inverse) == state_ && !isPositive_[inverse]) {
          isPositive_[inverse] = 1;
          positive_.push_back(inverse);
        }

      if (step(neighbour).first == state_) {
        // in a medium the seed has no positive step, so it is never anyone's child
        if (neighbour == medium_.seed) throw BadMedium("bad medium: canonical path leaves the seed");
        state_ = std::move(neighbour);
        cursor_ = 0;
        return Event{Visit{state_}};
      }
    }

    if (state_ == medium_.seed) {
      done_ = true;
      return std::nullopt;
    }
    auto [parent, token] = step(state_);
    cursor_ = 0;
    while (cursor_ < tau) {
      if (call(parent, static_cast<Token>(cursor_++)) == state_) break;
    }
    state_ = std::move(parent);
    return Event{Return{token}};
  }

  /// Discovered positive tokens in discovery order.
  const std::vector<Token>& positiveTokens() const { return positive_; }
  std::uint64_t transitionCalls() const { return calls_; }
  bool finished() const { return done_; }

 private:
  S call(const S& s, Token t) {
    ++calls_;
    return medium_.transition(s, t);
  }

  std::pair<S, Token> step(const S& s) {
    for (Token t : positive_) {
      S next = call(s, t);
      if (!(next == s)) return {std::move(next), t};
    }
    throw BadMedium("bad medium: unable to find a positive step");
  }

  BlackBoxMedium<S> medium_;
  S state_;
  std::size_t cursor_ = 0;
  std::vector<Token> positive_;
  std::vector<char> isPositive_;
  std::uint64_t calls_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Pull-based stream of all states, seed first, each exactly once.
template <OpaqueState S>
class StateEnumerator {
 public:
  explicit StateEnumerator(BlackBoxMedium<S> medium) : search_(std::move(medium)) {}

  std::optional<S> next() {
    while (auto event = search_.advance()) {
      if (auto* visit = std::get_if<typename ReverseSearch<S>::Visit>(&*event)) return std::move(visit->state);
    }
    return std::nullopt;
  }

  const std::vector<Token>& positiveTokens() const { return search_.positiveTokens(); }
  std::uint64_t transitionCalls() const { return search_.transitionCalls(); }

 private:
  ReverseSearch<S> search_;
};

template <OpaqueState S>
StateEnumerator<S> enumerateStates(BlackBoxMedium<S> medium) {
  return StateEnumerator<S>(std::move(medium));
}

/// Reset word of length n - 1 sending every state to the seed: the tokens by
/// which the reverse search returns from each state to its parent.
template <OpaqueState S>
Message blackBoxResetSequence(BlackBoxMedium<S> medium) {
  ReverseSearch<S> search(std::move(medium));
  Message word;
  while (auto event = search.advance())
    if (auto* back = std::get_if<typename ReverseSearch<S>::Return>(&*event)) word.push_back(back->token);
  return word;
}

/// Oracle backed by an explicit medium; states are their indices.
inline BlackBoxMedium<State> wrapExplicit(const Medium& m, State seed = 0) {
  m.checkState(seed);
  return {m.tokenCount(), [&m](const State& s, Token t) { return m.apply(s, t); }, seed};
}

/// Bitmap set oracle: tokens i_x = 2x and d_x = 2x + 1 insert or delete x when
/// the membership predicate admits the result, and do nothing otherwise.
inline BlackBoxMedium<ElementSet> setFamilyOracle(std::size_t universe,
                                                  std::function<bool(const ElementSet&)> member,
                                                  ElementSet seed) {
  if (seed.size() != universe) throw Error("set oracle: seed does not match the universe size");
  auto transition = [universe, member = std::move(member)](const ElementSet& s, Token t) {
    const std::size_t x = t / 2;
    if (x >= universe) throw std::out_of_range("token index out of range");
    const bool insert = (t % 2) == 0;
    if (s.test(x) == insert) return s;
    ElementSet next = s;
    next.flip(x);
    return member(next) ? next : s;
  };
  return {2 * universe, std::move(transition), std::move(seed)};
}

/// "{1,3}" with 1-based element numbers.
inline std::string renderBitmap(const ElementSet& s) {
  std::string out = "{";
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(x + 1);
  }
  return out + "}";
}

}  // namespace media
