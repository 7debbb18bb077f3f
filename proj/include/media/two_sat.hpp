#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "media/types.hpp"

namespace media {

struct Literal {
  std::uint32_t variable;
  bool negated = false;

  Literal operator!() const { return {variable, !negated}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(std::uint32_t v) { return {v, false}; }
inline Literal neg(std::uint32_t v) { return {v, true}; }

using Clause = std::pair<Literal, Literal>;

struct TwoSatInstance {
  std::size_t variables = 0;
  std::vector<Clause> clauses;

  void validate() const {
    for (const auto& [a, b] : clauses)
      if (a.variable >= variables || b.variable >= variables)
        throw Error("2-SAT: literal refers to variable outside 0.." + std::to_string(variables));
  }
};

/// Linear-time 2-SAT: Tarjan's strongly connected components on the implication
/// graph. Variable v is true iff the component of v precedes that of !v in
/// Tarjan's (reverse topological) numbering.
inline std::optional<std::vector<bool>> twoSatSolve(const TwoSatInstance& inst) {
  inst.validate();
  const auto literals = 2 * inst.variables;
  auto node = [](Literal l) { return 2 * static_cast<std::size_t>(l.variable) + (l.negated ? 1 : 0); };

  std::vector<std::vector<std::uint32_t>> implies(literals);
  for (const auto& [a, b] : inst.clauses) {
    implies[node(!a)].push_back(static_cast<std::uint32_t>(node(b)));
    implies[node(!b)].push_back(static_cast<std::uint32_t>(node(a)));
  }

  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> order(literals, kUnvisited), low(literals, 0), component(literals, kUnvisited);
  std::vector<char> onStack(literals, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  std::uint32_t counter = 0, components = 0;

  for (std::uint32_t root = 0; root < literals; ++root) {
    if (order[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = 1;
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < implies[v].size()) {
        const auto w = implies[v][edge++];
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      if (low[v] == order[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = 0;
          component[w] = components;
        } while (w != v);
        ++components;
      }
      const auto finished = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }

  std::vector<bool> assignment(inst.variables);
  for (std::size_t v = 0; v < inst.variables; ++v) {
    const auto t = component[2 * v], f = component[2 * v + 1];
    if (t == f) return std::nullopt;
    assignment[v] = t < f;
  }
  return assignment;
}

}  // namespace media
