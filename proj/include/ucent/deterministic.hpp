#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ucent/centrality.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

/// Hop count; kUnreachable stands for an infinite distance.
using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// Deterministic undirected graph in compressed adjacency form.
/// Neighbor order follows edge order, as in UncertainGraph.
class SimpleGraph {
public:
  SimpleGraph() : offsets_(1, 0) {}
  SimpleGraph(std::size_t node_count, std::span<const Edge> edges);
  /// The edges present in `world`.
  explicit SimpleGraph(const PossibleWorld& world);

  /// Rebuilds in place, reusing storage.
  void assign(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

struct DistanceVector {
  NodeId source = 0;
  std::vector<Hops> dist;
};

DistanceVector bfs_distances(const SimpleGraph& g, NodeId source);
DistanceVector bfs_distances(const PossibleWorld& world, NodeId source);

/// Normalized harmonic closeness. Requires at least 2 nodes.
CentralityVector harmonic_closeness(const SimpleGraph& g);
CentralityVector harmonic_closeness(const PossibleWorld& world);

/// Normalized betweenness via Brandes' dependency accumulation.
/// Requires at least 3 nodes.
CentralityVector betweenness_brandes(const SimpleGraph& g);
CentralityVector betweenness_brandes(const PossibleWorld& world);

/// Normalized betweenness from all-pairs path counts:
/// sigma(s,t|v) = sigma(s,v) * sigma(v,t) whenever v lies on a shortest s-t
/// path. Independent of the Brandes recursion; used as its oracle.
CentralityVector betweenness_naive(const SimpleGraph& g);
CentralityVector betweenness_naive(const PossibleWorld& world);

/// Reusable buffers for the accumulating kernels below.
struct TraversalWorkspace {
  std::vector<Hops> dist;
  std::vector<NodeId> order;
  std::vector<double> sigma;
  std::vector<double> delta;
};

/// Adds sum_{s != v} 1/d(s,v) to sums[v] for every v (unnormalized harmonic).
void accumulate_harmonic(const SimpleGraph& g, std::span<double> sums, TraversalWorkspace& ws);

/// Adds the Brandes dependencies of every source to sums[v]. Each unordered
/// pair is counted from both ends, so dividing by (n-1)(n-2) normalizes.
void accumulate_brandes(const SimpleGraph& g, std::span<double> sums, TraversalWorkspace& ws);

} // namespace ucent
