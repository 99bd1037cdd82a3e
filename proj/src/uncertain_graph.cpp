#include "ucent/uncertain_graph.hpp"

#include <cmath>
#include <string>

#include "ucent/errors.hpp"

namespace ucent {

UncertainGraph::UncertainGraph(std::size_t node_count) : adjacency_(node_count) {}

UncertainGraph::UncertainGraph(std::size_t node_count, std::span<const WeightedEdge> edges)
    : adjacency_(node_count) {
  edges_.reserve(edges.size());
  probabilities_.reserve(edges.size());
  index_.reserve(edges.size());
  for (const auto& we : edges) {
    if (we.u == we.v) {
      throw InvalidInput("loop edge at node " + std::to_string(we.u));
    }
    if (we.u >= node_count || we.v >= node_count) {
      throw InvalidInput("edge {" + std::to_string(we.u) + "," + std::to_string(we.v) +
                         "} references a node >= " + std::to_string(node_count));
    }
    if (!(we.probability >= 0.0 && we.probability <= 1.0)) {
      throw InvalidInput("edge probability outside [0,1]");
    }
    const Edge e = canonical_edge(we.u, we.v);
    const auto id = static_cast<EdgeId>(edges_.size());
    if (!index_.emplace(key(e), id).second) {
      throw InvalidInput("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "}");
    }
    edges_.push_back(e);
    probabilities_.push_back(we.probability);
    if (we.probability > 0.0) {
      adjacency_[e.u].push_back({e.v, id});
      adjacency_[e.v].push_back({e.u, id});
    }
  }
}

std::optional<EdgeId> UncertainGraph::find_edge(NodeId a, NodeId b) const {
  if (a == b) return std::nullopt;
  auto it = index_.find(key(canonical_edge(a, b)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double UncertainGraph::probability(NodeId a, NodeId b) const {
  auto e = find_edge(a, b);
  if (!e) {
    throw InvalidInput("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  return probabilities_[*e];
}

std::vector<EdgeId> UncertainGraph::uncertain_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (probabilities_[e] > 0.0 && probabilities_[e] < 1.0) out.push_back(e);
  }
  return out;
}

PossibleWorld::PossibleWorld(const UncertainGraph& parent)
    : parent_(&parent), present_(parent.edge_count(), 0) {}

PossibleWorld PossibleWorld::from_edges(const UncertainGraph& parent,
                                        std::span<const Edge> present) {
  PossibleWorld w(parent);
  for (const Edge& e : present) {
    auto id = parent.find_edge(e.u, e.v);
    if (!id) {
      throw InvalidWorld("world references edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} which is not in the graph");
    }
    if (parent.probability(*id) == 0.0) {
      throw InvalidWorld("world contains an edge of probability 0");
    }
    w.set(*id, true);
  }
  for (EdgeId id = 0; id < parent.edge_count(); ++id) {
    if (parent.probability(id) == 1.0 && !w.contains(id)) {
      throw InvalidWorld("world is missing an edge of probability 1");
    }
  }
  return w;
}

PossibleWorld PossibleWorld::full(const UncertainGraph& parent) {
  PossibleWorld w(parent);
  for (EdgeId id = 0; id < parent.edge_count(); ++id) {
    w.set(id, parent.probability(id) > 0.0);
  }
  return w;
}

std::size_t PossibleWorld::present_count() const {
  std::size_t n = 0;
  for (auto b : present_) n += b;
  return n;
}

double world_probability(const UncertainGraph& g, const PossibleWorld& world) {
  if (&world.parent() != &g) {
    throw InvalidWorld("world was built from a different graph");
  }
  double pr = 1.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double p = g.probability(e);
    pr *= world.contains(e) ? p : 1.0 - p;
  }
  return pr;
}

} // namespace ucent
