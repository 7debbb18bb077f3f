#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "media/medium.hpp"
#include "media/set_family.hpp"

namespace media {

/// Hard cap on the number of states any generator will materialize.
inline constexpr std::size_t kMaxGeneratedStates = 2'000'000;

/// Simple graph (or digraph, when edges are read as arcs) on named vertices.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Vertices named a, b, c, ... (then v26, v27, ...).
  static Graph withVertices(std::size_t k) {
    Graph g;
    for (std::size_t v = 0; v < k; ++v)
      g.vertices.push_back(v < 26 ? std::string(1, static_cast<char>('a' + v)) : "v" + std::to_string(v));
    return g;
  }

  static Graph complete(std::size_t k) {
    Graph g = withVertices(k);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = x + 1; y < k; ++y) g.edges.emplace_back(x, y);
    return g;
  }

  Graph& add(std::size_t x, std::size_t y) {
    edges.emplace_back(x, y);
    return *this;
  }

  void validate(bool directed) const {
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (auto [x, y] : edges) {
      if (x >= vertices.size() || y >= vertices.size()) throw Error("graph: edge endpoint out of range");
      if (x == y) throw Error("graph: self-loop at vertex " + vertices[x]);
      seen.emplace_back(directed ? x : std::min(x, y), directed ? y : std::max(x, y));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw Error("graph: repeated edge");
  }
};

namespace detail {

inline std::string joinNames(const std::vector<std::string>& names, const std::vector<std::size_t>& order) {
  const bool compact = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += names[order[i]];
  }
  return out;
}

inline void checkStateCap(std::size_t count) {
  if (count > kMaxGeneratedStates)
    throw Error("generator: more than " + std::to_string(kMaxGeneratedStates) + " states");
}

}  // namespace detail

/// States are the topological orderings of a DAG (lexicographic order). There is
/// a token t_xy for every ordered pair of unrelated vertices; t_xy replaces an
/// adjacent "y x" by "x y". Pairs are numbered in ascending (x, y), x < y, with
/// t_xy = 2p and t_yx = 2p + 1.
inline Medium topologicalOrderingMedium(const Graph& dag) {
  dag.validate(true);
  const auto k = dag.vertices.size();
  if (k > 64) throw Error("topological orderings: at most 64 vertices are supported");

  std::vector<std::uint64_t> successors(k, 0), predecessors(k, 0);
  for (auto [x, y] : dag.edges) {
    successors[x] |= std::uint64_t{1} << y;
    predecessors[y] |= std::uint64_t{1} << x;
  }

  // Kahn's algorithm: reject cycles, and get an order for the reachability closure.
  std::vector<std::size_t> kahn;
  {
    std::vector<std::size_t> indegree(k, 0);
    for (auto [x, y] : dag.edges) ++indegree[y];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < k; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
      const auto v = ready.back();
      ready.pop_back();
      kahn.push_back(v);
      for (std::size_t w = 0; w < k; ++w)
        if ((successors[v] >> w) & 1u)
          if (--indegree[w] == 0) ready.push_back(w);
    }
    if (kahn.size() != k) throw Error("topological orderings: input graph has a cycle");
  }
  std::vector<std::uint64_t> below(k, 0);  // vertices reachable from v
  for (auto it = kahn.rbegin(); it != kahn.rend(); ++it)
    for (std::size_t w = 0; w < k; ++w)
      if ((successors[*it] >> w) & 1u) below[*it] |= below[w] | (std::uint64_t{1} << w);

  auto related = [&](std::size_t x, std::size_t y) { return ((below[x] >> y) & 1u) || ((below[y] >> x) & 1u); };

  std::vector<std::vector<Token>> pairToken(k, std::vector<Token>(k, kNoToken));
  std::vector<std::string> tokenLabels;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y) {
      if (related(x, y)) continue;
      pairToken[x][y] = static_cast<Token>(tokenLabels.size());
      tokenLabels.push_back("t_" + dag.vertices[x] + dag.vertices[y]);
      pairToken[y][x] = static_cast<Token>(tokenLabels.size());
      tokenLabels.push_back("t_" + dag.vertices[y] + dag.vertices[x]);
    }

  std::vector<std::string> orders;  // one byte per vertex index
  {
    std::string current;
    std::uint64_t placed = 0;
    std::function<void()> extend = [&]() {
      if (current.size() == k) {
        orders.push_back(current);
        detail::checkStateCap(orders.size());
        return;
      }
      for (std::size_t v = 0; v < k; ++v) {
        if ((placed >> v) & 1u) continue;
        if ((predecessors[v] & ~placed) != 0) continue;
        placed |= std::uint64_t{1} << v;
        current.push_back(static_cast<char>(v));
        extend();
        current.pop_back();
        placed &= ~(std::uint64_t{1} << v);
      }
    };
    extend();
  }

  std::unordered_map<std::string, State> index;
  index.reserve(orders.size());
  for (State s = 0; s < orders.size(); ++s) index.emplace(orders[s], s);

  std::vector<std::vector<Transition>> adjacency(orders.size());
  std::vector<std::string> labels;
  labels.reserve(orders.size());
  for (State s = 0; s < orders.size(); ++s) {
    std::string swapped = orders[s];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const auto y = static_cast<std::size_t>(swapped[i]);
      const auto x = static_cast<std::size_t>(swapped[i + 1]);
      const Token t = pairToken[x][y];
      if (t == kNoToken) continue;
      std::swap(swapped[i], swapped[i + 1]);
      adjacency[s].push_back({t, index.at(swapped)});
      std::swap(swapped[i], swapped[i + 1]);
    }
    std::vector<std::size_t> order(orders[s].begin(), orders[s].end());
    labels.push_back(detail::joinNames(dag.vertices, order));
  }
  const std::size_t pairs = tokenLabels.size() / 2;
  return Medium(TokenTable::paired(pairs, std::move(tokenLabels)), std::move(adjacency),
                std::move(labels));
}

inline constexpr std::size_t kMaxPermutationItems = 9;

/// All k! orderings of items a, b, c, ...; tau = k(k-1).
inline Medium permutationMedium(std::size_t k) {
  if (k < 1) throw Error("permutation medium: need at least one item");
  if (k > kMaxPermutationItems)
    throw Error("permutation medium: at most " + std::to_string(kMaxPermutationItems) + " items are supported");
  return topologicalOrderingMedium(Graph::withVertices(k));
}

/// States are the acyclic orientations of a simple graph. For edge e = (x, y) as
/// listed, t_xy = 2e points the edge x -> y and t_yx = 2e + 1 points it y -> x;
/// a token is effective when the reoriented graph stays acyclic.
inline Medium acyclicOrientationMedium(const Graph& g) {
  g.validate(false);
  const auto k = g.vertices.size();
  const auto e = g.edges.size();
  if (e > 22) throw Error("acyclic orientations: at most 22 edges are supported");
  if (k > 64) throw Error("acyclic orientations: at most 64 vertices are supported");

  auto acyclic = [&](std::uint32_t mask) {
    std::vector<std::size_t> indegree(k, 0);
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < e; ++i) {
      auto [x, y] = g.edges[i];
      if (!((mask >> i) & 1u)) std::swap(x, y);
      out[x].push_back(y);
      ++indegree[y];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < k; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    std::size_t done = 0;
    while (!ready.empty()) {
      const auto v = ready.back();
      ready.pop_back();
      ++done;
      for (auto w : out[v])
        if (--indegree[w] == 0) ready.push_back(w);
    }
    return done == k;
  };

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask)
    if (acyclic(mask)) masks.push_back(mask);
  detail::checkStateCap(masks.size());

  std::unordered_map<std::uint32_t, State> index;
  for (State s = 0; s < masks.size(); ++s) index.emplace(masks[s], s);

  std::vector<std::string> tokenLabels;
  for (auto [x, y] : g.edges) {
    tokenLabels.push_back("t_" + g.vertices[x] + g.vertices[y]);
    tokenLabels.push_back("t_" + g.vertices[y] + g.vertices[x]);
  }

  std::vector<std::vector<Transition>> adjacency(masks.size());
  std::vector<std::string> labels;
  for (State s = 0; s < masks.size(); ++s) {
    std::string label;
    for (std::size_t i = 0; i < e; ++i) {
      auto [x, y] = g.edges[i];
      const bool forward = (masks[s] >> i) & 1u;
      if (!forward) std::swap(x, y);
      if (i > 0) label += ',';
      label += g.vertices[x] + ">" + g.vertices[y];

      auto it = index.find(masks[s] ^ (std::uint32_t{1} << i));
      if (it != index.end()) adjacency[s].push_back({static_cast<Token>(2 * i + (forward ? 1 : 0)), it->second});
    }
    labels.push_back(std::move(label));
  }
  return Medium(TokenTable::paired(e, std::move(tokenLabels)), std::move(adjacency), std::move(labels));
}

/// Every subset of a k-element universe, ordered by bitmask value.
inline SetFamily powersetFamily(std::size_t k) {
  if (k > 20) throw Error("powerset: at most 20 elements are supported");
  std::vector<ElementSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) members.emplace_back(k, mask);
  return SetFamily(k, std::move(members));
}

/// Subsets of a u-element universe with at most k elements, ordered by bitmask value.
inline SetFamily boundedSizeFamily(std::size_t u, std::size_t k) {
  if (u > 20) throw Error("bounded-size family: at most 20 elements are supported");
  if (k == 0 && u > 0) throw Error("bounded-size family: size bound 0 leaves universe elements unused");
  std::vector<ElementSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) <= k) members.emplace_back(u, mask);
  return SetFamily(u, std::move(members));
}

/// Throws with a witness when some member minus one element is missing.
inline void requireDownwardClosed(const SetFamily& f) {
  const auto index = f.indexMap();
  for (const auto& s : f.members()) {
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) {
      ElementSet smaller = s;
      smaller.reset(x);
      if (!index.contains(smaller))
        throw Error("family is not downward closed: " + f.render(s) + " is a member but " + f.render(smaller) +
                    " is not");
    }
  }
}

inline Medium downwardClosedMedium(const SetFamily& f) {
  requireDownwardClosed(f);
  return detail::familyMedium(f);
}

/// Independent sets of a simple graph, ordered by bitmask value.
inline SetFamily independentSetFamily(const Graph& g) {
  g.validate(false);
  const auto k = g.vertices.size();
  if (k > 24) throw Error("independent sets: at most 24 vertices are supported");
  std::vector<std::uint32_t> neighbours(k, 0);
  for (auto [x, y] : g.edges) {
    neighbours[x] |= std::uint32_t{1} << y;
    neighbours[y] |= std::uint32_t{1} << x;
  }
  std::vector<ElementSet> members;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    bool independent = true;
    for (std::size_t v = 0; v < k && independent; ++v)
      if (((mask >> v) & 1u) && (neighbours[v] & mask)) independent = false;
    if (independent) members.emplace_back(k, mask);
    detail::checkStateCap(members.size());
  }
  return SetFamily(k, std::move(members), g.vertices);
}

inline Medium independentSetMedium(const Graph& g) { return detail::familyMedium(independentSetFamily(g)); }

inline constexpr std::size_t kMaxTreeHeight = 12;

/// Binary trees encoded as sets of heap numbers (root 0, children 2i+1 and 2i+2),
/// closed under taking parents. Unary nodes are allowed and the empty tree is
/// excluded. Height is bounded by maxHeight; when maxLeaves > 0 the number of
/// leaves is bounded too. Members are listed in lexicographic order of their
/// sorted node lists.
inline SetFamily binaryTreeFamily(std::size_t maxHeight, std::size_t maxLeaves = 0) {
  if (maxHeight > kMaxTreeHeight) throw Error("binary trees: height bound too large");
  struct Tree {
    std::vector<std::uint32_t> nodes;
    std::size_t leaves;
  };
  const std::size_t leafCap = maxLeaves == 0 ? SIZE_MAX : maxLeaves;

  std::function<std::vector<Tree>(std::uint32_t, std::size_t)> build = [&](std::uint32_t node, std::size_t budget) {
    std::vector<Tree> result;
    std::vector<Tree> lefts{{{}, 0}}, rights{{{}, 0}};
    if (budget > 0) {
      for (auto& t : build(2 * node + 1, budget - 1)) lefts.push_back(std::move(t));
      for (auto& t : build(2 * node + 2, budget - 1)) rights.push_back(std::move(t));
    }
    for (const auto& l : lefts)
      for (const auto& r : rights) {
        const std::size_t leaves = (l.nodes.empty() && r.nodes.empty()) ? 1 : l.leaves + r.leaves;
        if (leaves > leafCap) continue;
        Tree t{{node}, leaves};
        t.nodes.insert(t.nodes.end(), l.nodes.begin(), l.nodes.end());
        t.nodes.insert(t.nodes.end(), r.nodes.begin(), r.nodes.end());
        result.push_back(std::move(t));
        detail::checkStateCap(result.size());
      }
    return result;
  };

  auto trees = build(0, maxHeight);
  for (auto& t : trees) std::sort(t.nodes.begin(), t.nodes.end());
  std::sort(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) { return a.nodes < b.nodes; });

  std::uint32_t top = 0;
  for (const auto& t : trees) top = std::max(top, t.nodes.back());
  const std::size_t universe = top + 1;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < universe; ++x) names.push_back(std::to_string(x));

  std::vector<ElementSet> members;
  members.reserve(trees.size());
  for (const auto& t : trees) {
    ElementSet s(universe);
    for (auto v : t.nodes) s.set(v);
    members.push_back(std::move(s));
  }
  return SetFamily(universe, std::move(members), std::move(names));
}

/// Trees of height at most maxHeight.
inline Medium binaryTreeHeightMedium(std::size_t maxHeight) {
  if (maxHeight > 4) throw Error("binary trees: height bound above 4 without a leaf bound is too large");
  return detail::familyMedium(binaryTreeFamily(maxHeight));
}

/// Trees with at most maxLeaves leaves; maxHeight keeps the family finite since
/// unary chains have one leaf at any length.
inline Medium binaryTreeMedium(std::size_t maxLeaves, std::size_t maxHeight) {
  if (maxLeaves == 0) throw Error("binary trees: leaf bound must be positive");
  return detail::familyMedium(binaryTreeFamily(maxHeight, maxLeaves));
}

}  // namespace media
