#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace ucent {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;
/// Index of an edge in insertion order.
using EdgeId = std::uint32_t;

/// Unordered node pair, always stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge canonical_edge(NodeId a, NodeId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Edge as given by a caller or an input file, before validation.
struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double probability = 1.0;
};

struct Neighbor {
  NodeId node;
  EdgeId edge;
};

/// Undirected graph whose edges exist independently with a given probability.
///
/// Immutable once built. Adjacency lists keep input edge order, which fixes
/// every traversal order in the library. Edges with probability 0 are kept
/// (they round-trip through files) but never appear in adjacency lists, so no
/// traversal or sampled world ever uses them.
class UncertainGraph {
public:
  UncertainGraph() = default;
  explicit UncertainGraph(std::size_t node_count);

  /// Throws InvalidInput on loops, out-of-range endpoints, duplicate edges or
  /// probabilities outside [0,1].
  UncertainGraph(std::size_t node_count, std::span<const WeightedEdge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  Edge edge(EdgeId e) const { return edges_[e]; }
  double probability(EdgeId e) const { return probabilities_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const double> probabilities() const noexcept { return probabilities_; }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  /// Probability of {a,b}; throws InvalidInput when the edge does not exist.
  double probability(NodeId a, NodeId b) const;

  std::span<const Neighbor> neighbors(NodeId v) const { return adjacency_[v]; }

  /// Edges with 0 < p < 1, in edge order.
  std::vector<EdgeId> uncertain_edges() const;

private:
  static std::uint64_t key(Edge e) noexcept {
    return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
  }

  std::vector<Edge> edges_;
  std::vector<double> probabilities_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// One instance of an uncertain graph: the subset of its edges that exist.
///
/// Holds a pointer to the parent graph, which must outlive the world.
class PossibleWorld {
public:
  /// World with no edges present. Only valid as a world when the parent has
  /// no edge of probability 1; callers fill it with `set`.
  explicit PossibleWorld(const UncertainGraph& parent);

  /// World containing exactly `present`. Throws InvalidWorld when an edge is
  /// not in the parent, has probability 0, or when a probability-1 edge is
  /// missing.
  static PossibleWorld from_edges(const UncertainGraph& parent, std::span<const Edge> present);

  /// Every edge with positive probability.
  static PossibleWorld full(const UncertainGraph& parent);

  const UncertainGraph& parent() const noexcept { return *parent_; }
  bool contains(EdgeId e) const { return present_[e] != 0; }
  void set(EdgeId e, bool present) { present_[e] = present ? 1 : 0; }
  std::size_t present_count() const;

private:
  const UncertainGraph* parent_;
  std::vector<std::uint8_t> present_;
};

/// Probability of sampling exactly `world` from `g`.
/// Throws InvalidWorld when `world` belongs to another graph.
double world_probability(const UncertainGraph& g, const PossibleWorld& world);

} // namespace ucent
