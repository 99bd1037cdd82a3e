#include "ucent/deterministic.hpp"

#include <algorithm>

#include "ucent/errors.hpp"

namespace ucent {
namespace {

void require_nodes(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw InvalidInput(std::string(what) + " needs at least " + std::to_string(minimum) +
                       " nodes, got " + std::to_string(n));
  }
}

// Plain BFS filling ws.dist and ws.order; optionally counts shortest paths.
void bfs(const SimpleGraph& g, NodeId source, TraversalWorkspace& ws, bool count_paths) {
  const std::size_t n = g.node_count();
  ws.dist.assign(n, kUnreachable);
  ws.order.clear();
  if (count_paths) ws.sigma.assign(n, 0.0);

  ws.dist[source] = 0;
  if (count_paths) ws.sigma[source] = 1.0;
  ws.order.push_back(source);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId v = ws.order[head];
    const Hops next = ws.dist[v] + 1;
    for (NodeId w : g.neighbors(v)) {
      if (ws.dist[w] == kUnreachable) {
        ws.dist[w] = next;
        ws.order.push_back(w);
      }
      if (count_paths && ws.dist[w] == next) ws.sigma[w] += ws.sigma[v];
    }
  }
}

std::vector<Edge> present_edges(const PossibleWorld& world) {
  const auto& g = world.parent();
  std::vector<Edge> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (world.contains(e)) out.push_back(g.edge(e));
  }
  return out;
}

} // namespace

SimpleGraph::SimpleGraph(std::size_t node_count, std::span<const Edge> edges) {
  assign(node_count, edges);
}

SimpleGraph::SimpleGraph(const PossibleWorld& world) {
  const auto edges = present_edges(world);
  assign(world.parent().node_count(), edges);
}

void SimpleGraph::assign(std::size_t node_count, std::span<const Edge> edges) {
  offsets_.assign(node_count + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count || e.u == e.v) {
      throw InvalidInput("invalid edge for a graph with " + std::to_string(node_count) +
                         " nodes");
    }
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
}

DistanceVector bfs_distances(const SimpleGraph& g, NodeId source) {
  if (source >= g.node_count()) throw InvalidInput("source node out of range");
  TraversalWorkspace ws;
  bfs(g, source, ws, false);
  return {source, std::move(ws.dist)};
}

DistanceVector bfs_distances(const PossibleWorld& world, NodeId source) {
  return bfs_distances(SimpleGraph(world), source);
}

void accumulate_harmonic(const SimpleGraph& g, std::span<double> sums, TraversalWorkspace& ws) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    bfs(g, v, ws, false);
    double sum = 0.0;
    for (std::size_t i = 1; i < ws.order.size(); ++i) sum += 1.0 / ws.dist[ws.order[i]];
    sums[v] += sum;
  }
}

void accumulate_brandes(const SimpleGraph& g, std::span<double> sums, TraversalWorkspace& ws) {
  const std::size_t n = g.node_count();
  for (NodeId s = 0; s < n; ++s) {
    bfs(g, s, ws, true);
    ws.delta.assign(n, 0.0);
    for (std::size_t i = ws.order.size(); i-- > 1;) {
      const NodeId w = ws.order[i];
      const double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
      for (NodeId v : g.neighbors(w)) {
        if (ws.dist[v] + 1 == ws.dist[w]) ws.delta[v] += ws.sigma[v] * coeff;
      }
      sums[w] += ws.delta[w];
    }
  }
}

CentralityVector harmonic_closeness(const SimpleGraph& g) {
  const std::size_t n = g.node_count();
  require_nodes(n, 2, "harmonic closeness");
  CentralityVector out;
  out.provenance.method = "harmonic";
  out.scores.assign(n, 0.0);
  TraversalWorkspace ws;
  accumulate_harmonic(g, out.scores, ws);
  for (double& x : out.scores) x /= static_cast<double>(n - 1);
  return out;
}

CentralityVector harmonic_closeness(const PossibleWorld& world) {
  return harmonic_closeness(SimpleGraph(world));
}

CentralityVector betweenness_brandes(const SimpleGraph& g) {
  const std::size_t n = g.node_count();
  require_nodes(n, 3, "betweenness");
  CentralityVector out;
  out.provenance.method = "betweenness-brandes";
  out.scores.assign(n, 0.0);
  TraversalWorkspace ws;
  accumulate_brandes(g, out.scores, ws);
  const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& x : out.scores) x /= norm;
  return out;
}

CentralityVector betweenness_brandes(const PossibleWorld& world) {
  return betweenness_brandes(SimpleGraph(world));
}

CentralityVector betweenness_naive(const SimpleGraph& g) {
  const std::size_t n = g.node_count();
  require_nodes(n, 3, "betweenness");

  std::vector<std::vector<Hops>> dist(n);
  std::vector<std::vector<double>> sigma(n);
  TraversalWorkspace ws;
  for (NodeId s = 0; s < n; ++s) {
    bfs(g, s, ws, true);
    dist[s] = ws.dist;
    sigma[s] = ws.sigma;
  }

  CentralityVector out;
  out.provenance.method = "betweenness-naive";
  out.scores.assign(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      const Hops dst = dist[s][t];
      if (dst == kUnreachable) continue; // sigma(s,t) = 0 contributes nothing
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] == kUnreachable || dist[v][t] == kUnreachable) continue;
        if (dist[s][v] + dist[v][t] != dst) continue;
        out.scores[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  const double norm = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : out.scores) x *= norm;
  return out;
}

CentralityVector betweenness_naive(const PossibleWorld& world) {
  return betweenness_naive(SimpleGraph(world));
}

} // namespace ucent
