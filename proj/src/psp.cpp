#include "ucent/psp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ucent/errors.hpp"
#include "ucent/parallel.hpp"

namespace ucent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pair(const UncertainGraph& g, NodeId s, NodeId t) {
  if (s >= g.node_count() || t >= g.node_count()) throw InvalidInput("node out of range");
  if (s == t) throw InvalidInput("PSP exploration needs two distinct nodes");
}

void check_phi(double phi) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw InvalidInput("phi must lie in [0,1]");
}

bool is_pred(std::span<const Hops> dist, NodeId pred, NodeId node) {
  return dist[pred] != kUnreachable && dist[pred] + 1 == dist[node];
}

std::vector<Edge> retrieve_min_edges_impl(const UncertainGraph& g, NodeId t,
                                          std::span<const Hops> dist,
                                          std::span<const MinEdgeTag> tags,
                                          const DeletedEdges& deleted,
                                          std::vector<std::uint8_t>& visited,
                                          std::vector<NodeId>& queue) {
  std::vector<Edge> out;
  visited.assign(g.node_count(), 0);
  queue.clear();
  visited[t] = 1;

  for (const Neighbor& nb : g.neighbors(t)) {
    if (deleted.contains(nb.edge) || !is_pred(dist, nb.node, t)) continue;
    visited[nb.node] = 1;
    if (g.probability(nb.edge) <= tags[nb.node].prob) {
      out.push_back(canonical_edge(t, nb.node));
    } else {
      queue.push_back(nb.node);
    }
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId curr = queue[head];
    for (const Neighbor& nb : g.neighbors(curr)) {
      if (deleted.contains(nb.edge) || !is_pred(dist, nb.node, curr)) continue;
      const Edge e = canonical_edge(curr, nb.node);
      if (tags[curr].edge == e) {
        out.push_back(e);
      } else if (!visited[nb.node]) {
        visited[nb.node] = 1;
        queue.push_back(nb.node);
      }
    }
  }
  return out;
}

// Per-thread buffers for repeated rounds.
//
// A round runs in three passes over (V, E \ deleted):
//   1. BFS from s until the level of t is complete (distances, visit order);
//   2. backwards from t, mark the nodes lying on some shortest s-t path;
//   3. forwards in BFS order over the marked nodes, extend path lists and
//      minimal-edge tags exactly as a single augmented BFS would, since every
//      predecessor of a marked node is itself marked and visited earlier.
// Restricting pass 3 to marked nodes avoids building path lists for nodes
// that cannot reach t on a shortest path.
class Explorer {
public:
  explicit Explorer(const UncertainGraph& g)
      : g_(g),
        dist_(g.node_count(), kUnreachable),
        on_path_(g.node_count(), 0),
        reached_(g.node_count(), 0),
        tags_(g.node_count()),
        probs_(g.node_count()),
        inner_(g.node_count()) {}

  void run(NodeId s, NodeId t, const DeletedEdges& deleted, PathVariant variant,
           ExplorationRound& out) {
    reset();
    out.length = kUnreachable;
    out.path_probs.clear();
    out.inner_nodes.clear();
    out.min_edges.clear();

    bfs(s, t, deleted);
    if (dist_[t] == kUnreachable) return;
    mark_shortest_path_nodes(t, deleted);
    propagate(s, t, deleted, variant);

    out.length = dist_[t];
    out.path_probs = std::move(probs_[t]);
    if (variant == PathVariant::betweenness) out.inner_nodes = std::move(inner_[t]);
    out.min_edges = retrieve_min_edges_impl(g_, t, dist_, tags_, deleted, visited_, queue_);
  }

private:
  void reset() {
    for (NodeId v : order_) {
      dist_[v] = kUnreachable;
      on_path_[v] = 0;
      reached_[v] = 0;
      tags_[v] = MinEdgeTag{};
      probs_[v].clear();
      inner_[v].clear();
    }
    order_.clear();
  }

  void bfs(NodeId s, NodeId t, const DeletedEdges& deleted) {
    dist_[s] = 0;
    order_.push_back(s);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const NodeId curr = order_[head];
      if (dist_[t] != kUnreachable && dist_[curr] >= dist_[t]) break;
      for (const Neighbor& nb : g_.neighbors(curr)) {
        if (deleted.contains(nb.edge) || dist_[nb.node] != kUnreachable) continue;
        dist_[nb.node] = dist_[curr] + 1;
        order_.push_back(nb.node);
      }
    }
  }

  void mark_shortest_path_nodes(NodeId t, const DeletedEdges& deleted) {
    stack_.clear();
    on_path_[t] = 1;
    stack_.push_back(t);
    while (!stack_.empty()) {
      const NodeId x = stack_.back();
      stack_.pop_back();
      for (const Neighbor& nb : g_.neighbors(x)) {
        if (deleted.contains(nb.edge) || on_path_[nb.node] || !is_pred(dist_, nb.node, x)) continue;
        on_path_[nb.node] = 1;
        stack_.push_back(nb.node);
      }
    }
  }

  void propagate(NodeId s, NodeId t, const DeletedEdges& deleted, PathVariant variant) {
    const bool with_nodes = variant == PathVariant::betweenness;
    reached_[s] = 1;
    tags_[s] = MinEdgeTag{};
    probs_[s].assign(1, 1.0);
    if (with_nodes) inner_[s].assign(1, {});

    const Hops target_depth = dist_[t];
    for (NodeId curr : order_) {
      if (dist_[curr] >= target_depth) break;
      if (!on_path_[curr]) continue;
      for (const Neighbor& nb : g_.neighbors(curr)) {
        const NodeId child = nb.node;
        if (deleted.contains(nb.edge) || !on_path_[child] || !is_pred(dist_, curr, child)) continue;
        const double p = g_.probability(nb.edge);

        auto& child_probs = probs_[child];
        for (double q : probs_[curr]) child_probs.push_back(p * q);
        if (with_nodes) {
          auto& child_inner = inner_[child];
          for (const auto& nodes : inner_[curr]) {
            child_inner.push_back(nodes);
            if (curr != s) child_inner.back().push_back(curr);
          }
        }

        update_tag(curr, child, nb.edge, p);
      }
      // Every successor of curr has been extended; its lists are no longer needed.
      std::vector<double>().swap(probs_[curr]);
      if (with_nodes) std::vector<std::vector<NodeId>>().swap(inner_[curr]);
    }
  }

  void update_tag(NodeId curr, NodeId child, EdgeId edge, double p) {
    const MinEdgeTag& from = tags_[curr];
    MinEdgeTag& tag = tags_[child];
    const MinEdgeTag fresh{g_.edge(edge), p, dist_[child]};

    if (!reached_[child]) {
      reached_[child] = 1;
      tag = from.prob >= p ? fresh : from;
      return;
    }
    const double min_prob = std::min(tag.prob, from.prob);
    if (min_prob >= p) {
      tag = fresh;
    } else if (tag.prob > from.prob) {
      tag = from;
    } else if (tag.prob == from.prob && from.depth > tag.depth) {
      tag = from;
    }
  }

  const UncertainGraph& g_;
  std::vector<Hops> dist_;
  std::vector<NodeId> order_;
  std::vector<std::uint8_t> on_path_;
  std::vector<std::uint8_t> reached_;
  std::vector<MinEdgeTag> tags_;
  std::vector<std::vector<double>> probs_;
  std::vector<std::vector<std::vector<NodeId>>> inner_;
  std::vector<NodeId> stack_;
  std::vector<std::uint8_t> visited_;
  std::vector<NodeId> queue_;
};

void delete_all(const UncertainGraph& g, DeletedEdges& deleted, std::span<const Edge> edges) {
  for (const Edge& e : edges) deleted.insert(*g.find_edge(e.u, e.v));
}

// Running sums of the estimated distribution: gamma = finite mass,
// delta = sum of k * mass(k).
struct DistanceSums {
  double gamma = 0.0;
  double delta = 0.0;

  double expected_reliable() const { return gamma == 0.0 ? kInf : delta / gamma; }
};

DistanceSums explore_distance(const UncertainGraph& g, Explorer& explorer, DeletedEdges& deleted,
                              ExplorationRound& round, NodeId s, NodeId t, double phi,
                              EstimatedDistribution* dist, PspTrace* trace) {
  deleted.clear();
  DistanceSums sums;
  double negated_product = 1.0; // product of (1 - Pr(S)) over all paths found so far
  double connection = 0.0;

  while (connection < phi) {
    explorer.run(s, t, deleted, PathVariant::harmonic, round);
    if (!round.connected()) break;

    double path_sum = 0.0;
    for (double p : round.path_probs) path_sum += p;
    const double new_mass = negated_product * path_sum;
    const bool capped = sums.gamma + new_mass >= 1.0;

    if (trace) {
      PspRoundTrace r;
      r.length = round.length;
      r.abs_probs = round.path_probs;
      for (double p : round.path_probs) r.rel_probs.push_back(p * negated_product);
      r.min_edges = round.min_edges;
      r.capped = capped;
      trace->rounds.push_back(std::move(r));
    }

    const auto k = static_cast<double>(round.length);
    if (capped) {
      const double rest = 1.0 - sums.gamma;
      if (dist) dist->mass[round.length] = rest;
      sums.delta += k * rest;
      sums.gamma = 1.0;
      if (dist) dist->mass_inf = 0.0;
      if (trace) {
        for (double p : round.path_probs) negated_product *= 1.0 - p;
        trace->connection_probability = 1.0 - negated_product;
      }
      return sums;
    }

    if (dist) dist->mass[round.length] = new_mass;
    sums.gamma += new_mass;
    sums.delta += k * new_mass;
    for (double p : round.path_probs) negated_product *= 1.0 - p;
    connection = 1.0 - negated_product;
    delete_all(g, deleted, round.min_edges);
  }

  if (dist) dist->mass_inf = 1.0 - sums.gamma;
  if (trace) trace->connection_probability = connection;
  return sums;
}

// Per-node sigma(s,t|v) accumulator for one pair; `touched` lists the nodes
// with an entry.
struct ThroughSums {
  explicit ThroughSums(std::size_t n) : value(n, 0.0), seen(n, 0) {}

  void add(NodeId v, double x) {
    if (!seen[v]) {
      seen[v] = 1;
      touched.push_back(v);
    }
    value[v] += x;
  }
  void clear() {
    for (NodeId v : touched) {
      value[v] = 0.0;
      seen[v] = 0;
    }
    touched.clear();
  }

  std::vector<double> value;
  std::vector<std::uint8_t> seen;
  std::vector<NodeId> touched;
};

PairBetweenness explore_betweenness(const UncertainGraph& g, Explorer& explorer,
                                    DeletedEdges& deleted, ExplorationRound& round, NodeId s,
                                    NodeId t, double phi, ThroughSums& through) {
  deleted.clear();
  PairBetweenness pair;
  double negated_product = 1.0;

  while (pair.connection_probability < phi) {
    explorer.run(s, t, deleted, PathVariant::betweenness, round);
    if (!round.connected()) break;
    ++pair.rounds;

    double next_product = negated_product;
    for (std::size_t i = 0; i < round.path_probs.size(); ++i) {
      const double abs_prob = round.path_probs[i];
      const double rel_prob = abs_prob * negated_product;
      pair.sigma += rel_prob;
      next_product *= 1.0 - abs_prob;
      for (NodeId v : round.inner_nodes[i]) through.add(v, rel_prob);
    }
    negated_product = next_product;
    pair.connection_probability = 1.0 - negated_product;
    delete_all(g, deleted, round.min_edges);
  }
  return pair;
}

// Sources are dealt round-robin into this many blocks; each block sums its
// pairs sequentially and blocks are reduced in order, so results do not
// depend on the number of workers.
constexpr std::size_t kSourceBlocks = 64;

} // namespace

void DeletedEdges::insert(const UncertainGraph& g, Edge e) {
  auto id = g.find_edge(e.u, e.v);
  if (!id) throw InvalidInput("cannot delete an edge that is not in the graph");
  insert(*id);
}

void DeletedEdges::clear() {
  for (EdgeId e : ids_) flags_[e] = 0;
  ids_.clear();
}

std::vector<PathRecord> ExplorationRound::records() const {
  std::vector<PathRecord> out;
  out.reserve(path_probs.size());
  for (std::size_t i = 0; i < path_probs.size(); ++i) {
    PathRecord r{length, path_probs[i], std::nullopt};
    if (i < inner_nodes.size()) r.inner_nodes = inner_nodes[i];
    out.push_back(std::move(r));
  }
  return out;
}

ExplorationRound all_shortest_paths_round(const UncertainGraph& g, NodeId s, NodeId t,
                                          const DeletedEdges& deleted, PathVariant variant) {
  check_pair(g, s, t);
  Explorer explorer(g);
  ExplorationRound round;
  explorer.run(s, t, deleted, variant, round);
  return round;
}

std::vector<Edge> retrieve_min_edges(const UncertainGraph& g, NodeId t, const DistanceVector& dist,
                                     std::span<const MinEdgeTag> tags,
                                     const DeletedEdges& deleted) {
  if (dist.dist.size() != g.node_count() || tags.size() != g.node_count()) {
    throw InvalidInput("distance and tag arrays must have one entry per node");
  }
  if (t >= g.node_count()) throw InvalidInput("node out of range");
  std::vector<std::uint8_t> visited;
  std::vector<NodeId> queue;
  return retrieve_min_edges_impl(g, t, dist.dist, tags, deleted, visited, queue);
}

PspTrace psp_explore_distance(const UncertainGraph& g, NodeId s, NodeId t, double phi) {
  check_pair(g, s, t);
  check_phi(phi);
  Explorer explorer(g);
  DeletedEdges deleted(g);
  ExplorationRound round;
  PspTrace trace;
  trace.distribution = EstimatedDistribution(s, t, g.node_count());
  explore_distance(g, explorer, deleted, round, s, t, phi, &trace.distribution, &trace);
  return trace;
}

EstimatedDistribution psp_distance_distribution(const UncertainGraph& g, NodeId s, NodeId t,
                                                double phi) {
  check_pair(g, s, t);
  check_phi(phi);
  Explorer explorer(g);
  DeletedEdges deleted(g);
  ExplorationRound round;
  EstimatedDistribution dist(s, t, g.node_count());
  explore_distance(g, explorer, deleted, round, s, t, phi, &dist, nullptr);
  return dist;
}

double psp_distance_er(const UncertainGraph& g, NodeId s, NodeId t, double phi) {
  return distance_er(psp_distance_distribution(g, s, t, phi));
}

CentralityVector psp_harmonic_all(const UncertainGraph& g, double phi, std::size_t workers) {
  check_phi(phi);
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("harmonic closeness needs at least 2 nodes");

  // rows[s][t - s - 1] = estimated d_ER(s,t) for s < t
  std::vector<std::vector<double>> rows(n - 1);
  parallel_for(n - 1, workers, [&](std::size_t si) {
    const auto s = static_cast<NodeId>(si);
    Explorer explorer(g);
    DeletedEdges deleted(g);
    ExplorationRound round;
    auto& row = rows[s];
    row.resize(n - 1 - s);
    for (NodeId t = s + 1; t < n; ++t) {
      row[t - s - 1] =
          explore_distance(g, explorer, deleted, round, s, t, phi, nullptr, nullptr)
              .expected_reliable();
    }
  });

  CentralityVector out;
  out.scores.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double h = 0.0;
    for (NodeId u = 0; u < v; ++u) {
      const double d = rows[u][v - u - 1];
      if (d != kInf) h += 1.0 / d;
    }
    for (NodeId u = v + 1; u < n; ++u) {
      const double d = rows[v][u - v - 1];
      if (d != kInf) h += 1.0 / d;
    }
    out.scores[v] = h / static_cast<double>(n - 1);
  }
  out.provenance.method = "psp-harmonic";
  out.provenance.phi = phi;
  return out;
}

CentralityVector psp_betweenness_all(const UncertainGraph& g, double phi, std::size_t workers) {
  check_phi(phi);
  const std::size_t n = g.node_count();
  if (n < 3) throw InvalidInput("betweenness needs at least 3 nodes");

  const std::size_t blocks = std::min(kSourceBlocks, n - 1);
  std::vector<std::vector<double>> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    Explorer explorer(g);
    DeletedEdges deleted(g);
    ExplorationRound round;
    std::vector<double> acc(n, 0.0);
    ThroughSums through(n);
    for (std::size_t si = b; si + 1 < n; si += blocks) {
      const auto s = static_cast<NodeId>(si);
      for (NodeId t = s + 1; t < n; ++t) {
        through.clear();
        const PairBetweenness pair =
            explore_betweenness(g, explorer, deleted, round, s, t, phi, through);
        if (pair.sigma == 0.0) continue;
        for (NodeId v : through.touched) {
          acc[v] += through.value[v] / pair.sigma * pair.connection_probability;
        }
      }
    }
    partial[b] = std::move(acc);
  });

  CentralityVector out;
  out.scores.assign(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) out.scores[v] += acc[v];
  }
  const double norm = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : out.scores) x *= norm;
  out.provenance.method = "psp-betweenness";
  out.provenance.phi = phi;
  return out;
}

PairBetweenness psp_pair_betweenness(const UncertainGraph& g, NodeId s, NodeId t, double phi) {
  check_pair(g, s, t);
  check_phi(phi);
  Explorer explorer(g);
  DeletedEdges deleted(g);
  ExplorationRound round;
  ThroughSums through(g.node_count());
  PairBetweenness pair = explore_betweenness(g, explorer, deleted, round, s, t, phi, through);
  std::sort(through.touched.begin(), through.touched.end());
  for (NodeId v : through.touched) pair.through.emplace_back(v, through.value[v]);
  return pair;
}

} // namespace ucent
