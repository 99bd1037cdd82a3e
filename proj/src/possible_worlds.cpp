#include "ucent/possible_worlds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ucent/errors.hpp"
#include "ucent/parallel.hpp"

namespace ucent {
namespace {

// Worlds are indexed by a bitmask over the uncertain edges. The index space
// is cut into this many contiguous blocks; block results are reduced in block
// order so the sum does not depend on the worker count.
constexpr std::uint64_t kMaxBlocks = 256;

struct WorldSpace {
  std::vector<EdgeId> uncertain;
  std::uint64_t count = 1;
};

WorldSpace world_space(const UncertainGraph& g, std::size_t cap) {
  WorldSpace ws;
  ws.uncertain = g.uncertain_edges();
  if (ws.uncertain.size() > cap || ws.uncertain.size() >= 63) {
    throw CapExceeded(ws.uncertain.size(), cap);
  }
  ws.count = std::uint64_t{1} << ws.uncertain.size();
  return ws;
}

// Sets `world` to the world with index `mask` and returns its probability.
double load_world(const UncertainGraph& g, const WorldSpace& space, std::uint64_t mask,
                  PossibleWorld& world) {
  double pr = 1.0;
  for (std::size_t i = 0; i < space.uncertain.size(); ++i) {
    const EdgeId e = space.uncertain[i];
    const bool present = (mask >> i) & 1U;
    world.set(e, present);
    pr *= present ? g.probability(e) : 1.0 - g.probability(e);
  }
  return pr;
}

// World with every certain edge present and every uncertain edge absent.
PossibleWorld base_world(const UncertainGraph& g) {
  PossibleWorld w(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) w.set(e, g.probability(e) == 1.0);
  return w;
}

// Runs `per_world(world, pr, acc)` over all worlds, block-parallel, and
// returns the block accumulators summed elementwise in block order.
template <typename PerWorld>
std::vector<double> reduce_worlds(const UncertainGraph& g, const EnumerationOptions& opts,
                                  std::size_t width, PerWorld per_world) {
  const WorldSpace space = world_space(g, opts.cap);
  const std::uint64_t blocks = std::min(space.count, kMaxBlocks);
  const std::uint64_t per_block = space.count / blocks;
  std::vector<std::vector<double>> partial(blocks);

  parallel_for(blocks, opts.workers, [&](std::size_t b) {
    PossibleWorld world = base_world(g);
    std::vector<double> acc(width, 0.0);
    const std::uint64_t begin = b * per_block;
    for (std::uint64_t mask = begin; mask < begin + per_block; ++mask) {
      const double pr = load_world(g, space, mask, world);
      per_world(world, pr, acc);
    }
    partial[b] = std::move(acc);
  });

  std::vector<double> total(width, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < width; ++i) total[i] += acc[i];
  }
  return total;
}

} // namespace

double DistanceDistribution::finite_total() const {
  double sum = 0.0;
  for (double m : mass) sum += m;
  return sum;
}

double distance_er(const DistanceDistribution& d) {
  if (d.mass_inf >= 1.0) return std::numeric_limits<double>::infinity();
  double weighted = 0.0;
  for (std::size_t k = 1; k < d.mass.size(); ++k) weighted += static_cast<double>(k) * d.mass[k];
  const double connected = 1.0 - d.mass_inf;
  if (weighted == 0.0) return std::numeric_limits<double>::infinity();
  return weighted / connected;
}

Hops distance_median(const DistanceDistribution& d) {
  Hops best = 1;
  double cumulative = 0.0;
  for (Hops k = 1; k <= d.max_length(); ++k) {
    cumulative += d.mass[k];
    if (cumulative <= 0.5) best = k;
  }
  return best;
}

Hops distance_majority(const DistanceDistribution& d) {
  Hops best = kUnreachable;
  double best_mass = -1.0;
  for (Hops k = 1; k <= d.max_length(); ++k) {
    if (d.mass[k] > best_mass) {
      best = k;
      best_mass = d.mass[k];
    }
  }
  if (d.mass_inf > best_mass) best = kUnreachable;
  return best;
}

std::uint64_t world_count(const UncertainGraph& g, std::size_t cap) {
  return world_space(g, cap).count;
}

void for_each_world(const UncertainGraph& g,
                    const std::function<void(const PossibleWorld&, double)>& visit,
                    std::size_t cap) {
  const WorldSpace space = world_space(g, cap);
  PossibleWorld world = base_world(g);
  for (std::uint64_t mask = 0; mask < space.count; ++mask) {
    const double pr = load_world(g, space, mask, world);
    visit(world, pr);
  }
}

DistanceDistribution exact_distance_distribution(const UncertainGraph& g, NodeId s, NodeId t,
                                                 const EnumerationOptions& opts) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n) throw InvalidInput("node out of range");
  if (s == t) throw InvalidInput("distance distribution needs two distinct nodes");

  // Slot n holds the mass at infinity.
  auto totals = reduce_worlds(g, opts, n + 1,
                              [&](const PossibleWorld& world, double pr, std::vector<double>& acc) {
                                const Hops d = bfs_distances(world, s).dist[t];
                                acc[d == kUnreachable ? n : d] += pr;
                              });

  DistanceDistribution out(s, t, n);
  for (std::size_t k = 1; k < n; ++k) out.mass[k] = totals[k];
  out.mass_inf = totals[n];
  return out;
}

CentralityVector exact_expected_centrality(const UncertainGraph& g, Measure measure,
                                           const EnumerationOptions& opts) {
  const std::size_t n = g.node_count();
  if (measure == Measure::harmonic && n < 2) {
    throw InvalidInput("harmonic closeness needs at least 2 nodes");
  }
  if (measure == Measure::betweenness && n < 3) {
    throw InvalidInput("betweenness needs at least 3 nodes");
  }

  auto totals = reduce_worlds(
      g, opts, n, [&](const PossibleWorld& world, double pr, std::vector<double>& acc) {
        const SimpleGraph sg(world);
        const auto c = measure == Measure::harmonic ? harmonic_closeness(sg)
                                                    : betweenness_brandes(sg);
        for (std::size_t v = 0; v < n; ++v) acc[v] += pr * c.scores[v];
      });

  CentralityVector out;
  out.scores = std::move(totals);
  out.provenance.method = std::string("exact-") + std::string(to_string(measure));
  return out;
}

void sample_world_edges(const UncertainGraph& g, SplitMix64& rng, std::vector<Edge>& out) {
  out.clear();
  const auto probs = g.probabilities();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double p = probs[e];
    if (p <= 0.0) continue;
    if (p >= 1.0 || rng.uniform() < p) out.push_back(g.edge(e));
  }
}

PossibleWorld sample_world(const UncertainGraph& g, SplitMix64& rng) {
  PossibleWorld w(g);
  const auto probs = g.probabilities();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double p = probs[e];
    if (p <= 0.0) continue;
    w.set(e, p >= 1.0 || rng.uniform() < p);
  }
  return w;
}

} // namespace ucent
