#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "media/content.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"

namespace media {

/// Subset of a finite universe {0, ..., size-1}.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A family of distinct subsets of a universe that equals the union of the members.
class SetFamily {
 public:
  SetFamily() : SetFamily(0, {ElementSet(0)}) {}

  SetFamily(std::size_t universe, std::vector<ElementSet> members, std::vector<std::string> names = {})
      : universe_(universe), members_(std::move(members)), names_(std::move(names)) {
    if (members_.empty()) throw Error("set family: at least one member is required");
    if (names_.empty())
      for (std::size_t x = 0; x < universe_; ++x) names_.push_back(std::to_string(x + 1));
    if (names_.size() != universe_) throw Error("set family: element name count does not match universe size");

    ElementSet all(universe_);
    std::unordered_map<ElementSet, std::size_t> index;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].size() != universe_) throw Error("set family: member size does not match universe");
      if (!index.emplace(members_[i], i).second)
        throw Error("set family: duplicate member " + render(members_[i]));
      all |= members_[i];
    }
    if (!all.all()) {
      const auto x = (~all).find_first();
      throw Error("set family: element " + names_[x] + " belongs to no member");
    }
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<ElementSet>& members() const { return members_; }
  const ElementSet& member(std::size_t i) const { return members_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// "{a,b}" using element names in universe order.
  std::string render(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) {
      if (!first) out += ',';
      out += names_.at(x);
      first = false;
    }
    return out + "}";
  }

  /// Member index lookup table.
  std::unordered_map<ElementSet, std::size_t> indexMap() const {
    std::unordered_map<ElementSet, std::size_t> index;
    index.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) index.emplace(members_[i], i);
    return index;
  }

 private:
  std::size_t universe_;
  std::vector<ElementSet> members_;
  std::vector<std::string> names_;
};

/// Two members whose distance in the single-element-change graph differs from
/// the size of their symmetric difference.
struct GradingWitness {
  std::size_t first;
  std::size_t second;
};

namespace detail {

/// Members must be distinct and of equal size.
inline std::optional<GradingWitness> gradingViolation(const std::vector<ElementSet>& members) {
  const auto n = members.size();
  if (n == 0) return std::nullopt;
  const auto universe = members.front().size();
  std::unordered_map<ElementSet, std::size_t> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(members[i], i);

  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    ElementSet probe = members[i];
    for (std::size_t x = 0; x < universe; ++x) {
      probe.flip(x);
      if (auto it = index.find(probe); it != index.end()) adjacent[i].push_back(it->second);
      probe.flip(x);
    }
  }

  std::vector<std::size_t> dist(n);
  std::deque<std::size_t> queue;
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : adjacent[v])
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (std::size_t dst = src + 1; dst < n; ++dst)
      if (dist[dst] != (members[src] ^ members[dst]).count()) return GradingWitness{src, dst};
  }
  return std::nullopt;
}

}  // namespace detail

/// BFS from every member over the |symmetric difference| = 1 graph; O(n^2 + n |X|).
inline std::optional<GradingWitness> findGradingViolation(const SetFamily& f) {
  return detail::gradingViolation(f.members());
}

inline bool isWellGraded(const SetFamily& f) { return !findGradingViolation(f).has_value(); }

namespace detail {

/// Medium of a family assumed well-graded. Tokens i_x (2j) and d_x (2j+1) are
/// created for the j-th element that lies in some but not all members; elements
/// common to every member never produce an effective transition.
inline Medium familyMedium(const SetFamily& f) {
  ElementSet common(f.universe());
  common.set();
  for (const auto& s : f.members()) common &= s;

  std::vector<std::size_t> active;
  for (std::size_t x = 0; x < f.universe(); ++x)
    if (!common.test(x)) active.push_back(x);

  std::vector<std::string> tokenLabels;
  for (auto x : active) {
    tokenLabels.push_back("i_" + f.names()[x]);
    tokenLabels.push_back("d_" + f.names()[x]);
  }

  const auto index = f.indexMap();
  std::vector<std::vector<Transition>> adjacency(f.size());
  std::vector<std::string> labels;
  labels.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    ElementSet probe = f.member(i);
    for (std::size_t j = 0; j < active.size(); ++j) {
      const auto x = active[j];
      probe.flip(x);
      if (auto it = index.find(probe); it != index.end()) {
        const Token t = static_cast<Token>(2 * j + (f.member(i).test(x) ? 1 : 0));
        adjacency[i].push_back({t, static_cast<State>(it->second)});
      }
      probe.flip(x);
    }
    labels.push_back(f.render(f.member(i)));
  }
  return Medium(TokenTable::paired(active.size(), std::move(tokenLabels)), std::move(adjacency), std::move(labels));
}

}  // namespace detail

/// Medium whose states are the members of a well-graded family, with tokens
/// Si_x = S + {x} and Sd_x = S - {x} when the result is a member. States keep the
/// member order. Throws with a witness pair when the family is not well-graded.
inline Medium fromWellGradedFamily(const SetFamily& f) {
  if (auto w = findGradingViolation(f))
    throw Error("family is not well-graded: " + f.render(f.member(w->first)) + " and " +
                f.render(f.member(w->second)) + " are not joined by a shortest single-element chain");
  return detail::familyMedium(f);
}

/// Family of positive contents under orientation o. Element p of the universe is
/// reverse pair p, named after its positive token.
inline SetFamily positiveContentFamily(const Medium& m, const Orientation& o) {
  const auto& tokens = m.tokens();
  if (o.size() != tokens.size()) throw Error("orientation does not match the medium's tokens");
  const ContentTable contents(m);

  std::vector<std::string> names;
  for (std::size_t p = 0; p < tokens.pairCount(); ++p) {
    const Token lo = tokens.pairLow(p);
    names.push_back(tokens.name(o.isPositive(lo) ? lo : tokens.reverse(lo)));
  }

  std::vector<ElementSet> members;
  members.reserve(m.stateCount());
  for (State s = 0; s < m.stateCount(); ++s) {
    ElementSet set(tokens.pairCount());
    for (std::size_t p = 0; p < tokens.pairCount(); ++p) {
      const Token lo = tokens.pairLow(p);
      const Token pos = o.isPositive(lo) ? lo : tokens.reverse(lo);
      if (contents.contains(s, pos)) set.set(p);
    }
    members.push_back(std::move(set));
  }
  return SetFamily(tokens.pairCount(), std::move(members), std::move(names));
}

}  // namespace media
