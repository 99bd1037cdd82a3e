#pragma once

// Graph builders and brute-force oracles shared by the test binaries. The
// oracles use only the graph container, never the algorithms under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ucent/uncertain_graph.hpp"

namespace testing {

using ucent::Edge;
using ucent::NodeId;
using ucent::UncertainGraph;
using ucent::WeightedEdge;

inline UncertainGraph make_graph(std::size_t n, std::vector<WeightedEdge> edges) {
  return UncertainGraph(n, edges);
}

inline UncertainGraph star(std::size_t n, double p = 1.0) {
  std::vector<WeightedEdge> e;
  for (NodeId v = 1; v < n; ++v) e.push_back({0, v, p});
  return UncertainGraph(n, e);
}

inline UncertainGraph path(std::size_t n, double p = 1.0) {
  std::vector<WeightedEdge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, p});
  return UncertainGraph(n, e);
}

inline UncertainGraph complete(std::size_t n, double p = 1.0) {
  std::vector<WeightedEdge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.push_back({u, v, p});
  return UncertainGraph(n, e);
}

/// G(n, density) with probabilities from `prob(rng)`.
template <typename Prob>
UncertainGraph random_graph(std::size_t n, double density, std::mt19937_64& rng, Prob prob) {
  std::bernoulli_distribution keep(density);
  std::vector<WeightedEdge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (keep(rng)) e.push_back({u, v, prob(rng)});
  return UncertainGraph(n, e);
}

inline UncertainGraph random_certain_graph(std::size_t n, double density, std::mt19937_64& rng) {
  return random_graph(n, density, rng, [](std::mt19937_64&) { return 1.0; });
}

/// Random graph where at most `max_uncertain` edges get a probability in
/// (0,1); the rest are certain.
inline UncertainGraph random_small_uncertain(std::size_t n, double density, std::size_t max_uncertain,
                                             std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::vector<WeightedEdge> e;
  std::size_t uncertain = 0;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (keep(rng)) {
        double p = 1.0;
        if (uncertain < max_uncertain && unit(rng) < 0.6) {
          p = unit(rng);
          ++uncertain;
        }
        e.push_back({u, v, p});
      }
  return UncertainGraph(n, e);
}

/// Every simple s-t path using edges with p > 0 and not in `blocked`,
/// as node sequences.
inline std::vector<std::vector<NodeId>> simple_paths(const UncertainGraph& g, NodeId s, NodeId t,
                                                     const std::vector<Edge>& blocked = {}) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> stack{s};
  std::vector<bool> on(g.node_count(), false);
  on[s] = true;
  std::function<void(NodeId)> dfs = [&](NodeId v) {
    if (v == t) {
      out.push_back(stack);
      return;
    }
    for (NodeId w = 0; w < g.node_count(); ++w) {
      if (on[w]) continue;
      const auto e = g.find_edge(v, w);
      if (!e || g.probability(*e) <= 0.0) continue;
      if (std::find(blocked.begin(), blocked.end(), ucent::canonical_edge(v, w)) != blocked.end())
        continue;
      on[w] = true;
      stack.push_back(w);
      dfs(w);
      stack.pop_back();
      on[w] = false;
    }
  };
  dfs(s);
  return out;
}

/// The shortest among simple_paths.
inline std::vector<std::vector<NodeId>> shortest_paths(const UncertainGraph& g, NodeId s, NodeId t,
                                                       const std::vector<Edge>& blocked = {}) {
  auto all = simple_paths(g, s, t, blocked);
  if (all.empty()) return all;
  std::size_t best = all.front().size();
  for (const auto& p : all) best = std::min(best, p.size());
  std::erase_if(all, [&](const auto& p) { return p.size() != best; });
  return all;
}

inline double path_probability(const UncertainGraph& g, const std::vector<NodeId>& p) {
  double pr = 1.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) pr *= g.probability(p[i], p[i + 1]);
  return pr;
}

/// Enumerates all subsets of the edges with 0 < p < 1 by recursion and calls
/// visit(present-edge list, probability).
inline void enumerate_worlds(const UncertainGraph& g,
                             const std::function<void(const std::vector<Edge>&, double)>& visit) {
  std::vector<Edge> present;
  std::function<void(ucent::EdgeId, double)> rec = [&](ucent::EdgeId e, double pr) {
    if (e == g.edge_count()) {
      visit(present, pr);
      return;
    }
    const double p = g.probability(e);
    if (p > 0.0) {
      present.push_back(g.edge(e));
      rec(e + 1, pr * p);
      present.pop_back();
    }
    if (p < 1.0) rec(e + 1, pr * (1.0 - p));
  };
  rec(0, 1.0);
}

/// All-pairs hop distances by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<int>> floyd(std::size_t n, const std::vector<Edge>& edges) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : edges) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline std::vector<Edge> support_edges(const UncertainGraph& g) {
  std::vector<Edge> out;
  for (ucent::EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.probability(e) > 0.0) out.push_back(g.edge(e));
  return out;
}

} // namespace testing
