#pragma once

// Possible-shortest-path (PSP) heuristics for uncertain graphs.
//
// For a pair (s,t) the exploration repeatedly finds all shortest s-t paths in
// the graph with some edges deleted, records their existence probabilities,
// and deletes one minimal-probability edge from every such path. Each round
// yields paths of a strictly greater length. The absolute probabilities of
// the paths found so far give:
//
//   estimated relative probability  Pr(S) * prod_{shorter paths G} (1 - Pr(G))
//   estimated connection chance     phi_st = 1 - prod_{all paths} (1 - Pr(G))
//
// Exploration stops once phi_st reaches the threshold phi or s and t are
// disconnected.

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "ucent/centrality.hpp"
#include "ucent/deterministic.hpp"
#include "ucent/possible_worlds.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

enum class PathVariant {
  harmonic,    // path probabilities only
  betweenness  // path probabilities and inner nodes
};

struct PathRecord {
  Hops length = 0;
  double abs_prob = 0.0;
  std::optional<std::vector<NodeId>> inner_nodes;
};

/// Minimal-probability edge seen on the shortest paths into a node.
/// The source carries the sentinel: no edge, probability +infinity.
struct MinEdgeTag {
  std::optional<Edge> edge;
  double prob = std::numeric_limits<double>::infinity();
  Hops depth = 0;
};

/// Edge set removed during the exploration of one pair.
class DeletedEdges {
public:
  explicit DeletedEdges(const UncertainGraph& g) : flags_(g.edge_count(), 0) {}

  bool contains(EdgeId e) const { return flags_[e] != 0; }
  void insert(EdgeId e) {
    if (!flags_[e]) {
      flags_[e] = 1;
      ids_.push_back(e);
    }
  }
  /// Throws InvalidInput when the edge is not in `g`.
  void insert(const UncertainGraph& g, Edge e);
  void clear();
  std::size_t size() const noexcept { return ids_.size(); }
  std::span<const EdgeId> ids() const noexcept { return ids_; }

private:
  std::vector<std::uint8_t> flags_;
  std::vector<EdgeId> ids_;
};

/// Outcome of one all-shortest-paths pass between s and t.
struct ExplorationRound {
  /// Common length of all paths; kUnreachable when s and t are disconnected.
  Hops length = kUnreachable;
  /// Absolute existence probability of every shortest path.
  std::vector<double> path_probs;
  /// Inner nodes of each path, parallel to path_probs (betweenness only).
  std::vector<std::vector<NodeId>> inner_nodes;
  /// Edges to delete so that every path above loses at least one edge.
  std::vector<Edge> min_edges;

  bool connected() const noexcept { return length != kUnreachable; }
  std::vector<PathRecord> records() const;
};

/// Explores all shortest s-t paths of (V, E \ deleted) by an augmented BFS
/// and picks the edges to delete. A newly traversed edge becomes a node's tag
/// when its probability is at most the inherited minimum; among equal
/// probabilities the edge farther from s (closer to t) is kept.
/// Throws InvalidInput when s == t.
ExplorationRound all_shortest_paths_round(const UncertainGraph& g, NodeId s, NodeId t,
                                          const DeletedEdges& deleted, PathVariant variant);

/// Walks backwards from t over shortest-path edges and emits each node's
/// tagged edge once it is traversed; next to t the last edge is emitted
/// directly when it is no more probable than the tag behind it.
std::vector<Edge> retrieve_min_edges(const UncertainGraph& g, NodeId t, const DistanceVector& dist,
                                     std::span<const MinEdgeTag> tags,
                                     const DeletedEdges& deleted);

using EstimatedDistribution = DistanceDistribution;

/// One exploration round as seen by the distance estimator.
struct PspRoundTrace {
  Hops length = 0;
  std::vector<double> abs_probs;
  /// Estimated relative probabilities (before any capping).
  std::vector<double> rel_probs;
  std::vector<Edge> min_edges;
  /// True when this round's mass would push the total to 1 or beyond; the
  /// round then absorbs the remaining mass and exploration stops.
  bool capped = false;
};

struct PspTrace {
  std::vector<PspRoundTrace> rounds;
  EstimatedDistribution distribution;
  /// phi_st over every explored path, including those of a capped round.
  double connection_probability = 0.0;
};

/// Estimated distance distribution with the full round-by-round trace.
PspTrace psp_explore_distance(const UncertainGraph& g, NodeId s, NodeId t, double phi);

/// Estimated distance distribution. When the accumulated mass plus a round's
/// mass reaches 1, that round's length receives 1 - accumulated and the
/// exploration stops; otherwise the remainder goes to infinity.
EstimatedDistribution psp_distance_distribution(const UncertainGraph& g, NodeId s, NodeId t,
                                                double phi);

/// Expected-reliable distance of the estimated distribution.
double psp_distance_er(const UncertainGraph& g, NodeId s, NodeId t, double phi);

inline constexpr double kDefaultPhi = 0.8;

/// PSP-harmonic closeness of every node. Requires at least 2 nodes.
CentralityVector psp_harmonic_all(const UncertainGraph& g, double phi, std::size_t workers = 1);

/// PSP-betweenness of every node. Requires at least 3 nodes.
CentralityVector psp_betweenness_all(const UncertainGraph& g, double phi,
                                     std::size_t workers = 1);

/// Contribution of one pair to PSP-betweenness before normalization.
struct PairBetweenness {
  std::size_t rounds = 0;
  /// Sum of estimated relative probabilities over all explored paths.
  double sigma = 0.0;
  double connection_probability = 0.0;
  /// (v, sigma(s,t|v)) for every inner node v of some explored path, by node.
  std::vector<std::pair<NodeId, double>> through;
};

PairBetweenness psp_pair_betweenness(const UncertainGraph& g, NodeId s, NodeId t, double phi);

} // namespace ucent
