#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "media/content.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"
#include "media/set_family.hpp"

namespace media {

enum class Check {
  UnusedToken,       // axiom 1: a token effective nowhere
  SelfLoop,          // a listed transition that does not change the state
  Determinism,       // two listed transitions for one token at one state
  ReverseClosure,    // axiom 1: St = Q listed without Q(reverse t) = S
  Connectivity,      // axiom 2
  ContentPartition,  // content does not split a reverse pair
  DistinctContents,  // two states with the same content
  WellGraded,        // positive-content family not well-graded
  Isomorphism,       // medium differs from the medium of its positive-content family
};

inline std::string_view checkName(Check c) {
  switch (c) {
    case Check::UnusedToken: return "axiom 1 (token never effective)";
    case Check::SelfLoop: return "listed ineffective transition";
    case Check::Determinism: return "determinism";
    case Check::ReverseClosure: return "axiom 1 (missing reverse transition)";
    case Check::Connectivity: return "axiom 2 (connectivity)";
    case Check::ContentPartition: return "axioms 3-4 (content partition)";
    case Check::DistinctContents: return "axioms 3-4 (distinct contents)";
    case Check::WellGraded: return "axioms 3-4 (well-graded contents)";
    case Check::Isomorphism: return "axioms 3-4 (family isomorphism)";
  }
  return "unknown";
}

struct Violation {
  Check check;
  std::string message;
  State state = kNoState;
  Token token = kNoToken;
  State other = kNoState;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  bool has(Check c) const {
    for (const auto& v : violations)
      if (v.check == c) return true;
    return false;
  }
};

namespace detail {

inline constexpr std::size_t kWitnessesPerCheck = 8;

class ReportBuilder {
 public:
  void add(Check c, std::string message, State s = kNoState, Token t = kNoToken, State other = kNoState) {
    if (++counts_[static_cast<int>(c)] > kWitnessesPerCheck) return;
    report_.violations.push_back({c, std::move(message), s, t, other});
  }
  bool empty() const { return report_.violations.empty(); }
  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
  std::size_t counts_[16] = {};
};

}  // namespace detail

/// Full axiom check of a transition system.
///
/// Structural checks first (every token effective somewhere, determinism,
/// reverse closure, connectivity). If those pass, the contents of all states
/// are computed, turned into positive contents under the lower-index
/// orientation, and the system is accepted iff those sets are distinct, form a
/// well-graded family F, and the state/token maps into the medium of F are an
/// isomorphism. Every failed sub-check is reported with a witness.
inline VerifyReport verifyMedium(const Medium& m) {
  detail::ReportBuilder out;
  const auto& tokens = m.tokens();
  const auto n = m.stateCount();
  const auto tau = m.tokenCount();

  std::vector<char> used(tau, 0);
  for (State s = 0; s < n; ++s) {
    Token previous = kNoToken;
    for (const auto& tr : m.transitions(s)) {
      if (tr.to == s) {
        out.add(Check::SelfLoop, "state " + m.stateName(s) + " lists token " + tokens.name(tr.token) + " as a self-loop",
                s, tr.token);
        continue;
      }
      used[tr.token] = 1;
      if (tr.token == previous)
        out.add(Check::Determinism, "state " + m.stateName(s) + " lists token " + tokens.name(tr.token) + " twice", s,
                tr.token);
      previous = tr.token;
      if (m.apply(tr.to, tokens.reverse(tr.token)) != s)
        out.add(Check::ReverseClosure,
                "transition " + m.stateName(s) + " -" + tokens.name(tr.token) + "-> " + m.stateName(tr.to) +
                    " has no reverse transition by " + tokens.name(tokens.reverse(tr.token)),
                s, tr.token, tr.to);
    }
  }
  for (Token t = 0; t < tau; ++t)
    if (!used[t]) out.add(Check::UnusedToken, "token " + tokens.name(t) + " is effective for no state", kNoState, t);

  // Undirected reachability so that connectivity is reported independently of reverse closure.
  {
    std::vector<std::vector<State>> undirected(n);
    for (State s = 0; s < n; ++s)
      for (const auto& tr : m.transitions(s)) {
        undirected[s].push_back(tr.to);
        undirected[tr.to].push_back(s);
      }
    std::vector<char> seen(n, 0);
    std::deque<State> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const State s = queue.front();
      queue.pop_front();
      for (State q : undirected[s])
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
    }
    for (State s = 0; s < n; ++s)
      if (!seen[s]) out.add(Check::Connectivity, "state " + m.stateName(s) + " is not connected to state 0", s);
  }

  if (!out.empty()) return out.take();

  const auto rootMembership = detail::contentMembership(m, 0);
  if (auto p = detail::brokenPair(tokens, rootMembership)) {
    const Token lo = tokens.pairLow(*p);
    out.add(Check::ContentPartition,
            "content of state " + m.stateName(0) + " does not contain exactly one of " + tokens.name(lo) + ", " +
                tokens.name(tokens.reverse(lo)),
            0, lo);
    return out.take();
  }

  const ContentTable contents(m);
  const auto orientation = Orientation::lowerPositive(tokens);
  const auto pairs = tokens.pairCount();

  std::vector<ElementSet> sets;
  sets.reserve(n);
  std::unordered_map<ElementSet, State> owner;
  owner.reserve(n);
  for (State s = 0; s < n; ++s) {
    ElementSet set(pairs);
    for (std::size_t p = 0; p < pairs; ++p)
      if (contents.contains(s, tokens.pairLow(p))) set.set(p);
    auto [it, fresh] = owner.emplace(set, s);
    if (!fresh)
      out.add(Check::DistinctContents,
              "states " + m.stateName(it->second) + " and " + m.stateName(s) + " have the same content", it->second,
              kNoToken, s);
    sets.push_back(std::move(set));
  }
  if (!out.empty()) return out.take();

  if (auto w = detail::gradingViolation(sets))
    out.add(Check::WellGraded,
            "states " + m.stateName(static_cast<State>(w->first)) + " and " +
                m.stateName(static_cast<State>(w->second)) + " are not joined by a straight chain",
            static_cast<State>(w->first), kNoToken, static_cast<State>(w->second));

  for (State s = 0; s < n; ++s) {
    for (Token t = 0; t < tau; ++t) {
      const auto p = tokens.pairOf(t);
      const bool inserts = orientation.isPositive(t);
      State expected = s;
      if (sets[s].test(p) != inserts) {
        ElementSet probe = sets[s];
        probe.flip(p);
        if (auto it = owner.find(probe); it != owner.end()) expected = it->second;
      }
      const State actual = m.apply(s, t);
      if (actual != expected)
        out.add(Check::Isomorphism,
                "state " + m.stateName(s) + " under " + tokens.name(t) + " goes to " + m.stateName(actual) +
                    " but its content family predicts " + m.stateName(expected),
                s, t, actual);
    }
  }
  return out.take();
}

/// Finds a state bijection from a to b that maps token t to tokenMap[t], if one
/// exists. Both media must be connected; tries every image of state 0.
inline std::optional<std::vector<State>> findIsomorphism(const Medium& a, const Medium& b,
                                                         const std::vector<Token>& tokenMap) {
  if (a.stateCount() != b.stateCount() || a.tokenCount() != b.tokenCount() ||
      a.transitionCount() != b.transitionCount() || tokenMap.size() != a.tokenCount())
    return std::nullopt;
  {
    std::vector<char> hit(b.tokenCount(), 0);
    for (Token t : tokenMap)
      if (t >= b.tokenCount() || std::exchange(hit[t], 1)) return std::nullopt;
  }
  const auto n = a.stateCount();
  for (State start = 0; start < n; ++start) {
    std::vector<State> image(n, kNoState);
    std::vector<char> taken(n, 0);
    image[0] = start;
    taken[start] = 1;
    std::deque<State> queue{0};
    bool ok = true;
    while (ok && !queue.empty()) {
      const State s = queue.front();
      queue.pop_front();
      for (const auto& tr : a.transitions(s)) {
        const State mapped = b.apply(image[s], tokenMap[tr.token]);
        if (mapped == image[s]) { ok = false; break; }
        if (image[tr.to] == kNoState) {
          if (taken[mapped]) { ok = false; break; }
          image[tr.to] = mapped;
          taken[mapped] = 1;
          queue.push_back(tr.to);
        } else if (image[tr.to] != mapped) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (std::find(image.begin(), image.end(), kNoState) != image.end()) continue;
    // Equal transition counts plus every a-transition mapping onto a b-transition make this a bijection on arcs.
    return image;
  }
  return std::nullopt;
}

/// Isomorphism after matching tokens by label. Both media must label every token.
inline std::optional<std::vector<State>> findLabelIsomorphism(const Medium& a, const Medium& b) {
  std::vector<Token> map(a.tokenCount());
  for (Token t = 0; t < a.tokenCount(); ++t) {
    auto other = b.tokens().find(a.tokens().label(t));
    if (!other) return std::nullopt;
    map[t] = *other;
  }
  return findIsomorphism(a, b, map);
}

}  // namespace media
