#include "ucent/monte_carlo.hpp"

#include <algorithm>

#include "ucent/deterministic.hpp"
#include "ucent/errors.hpp"
#include "ucent/parallel.hpp"
#include "ucent/possible_worlds.hpp"
#include "ucent/random.hpp"

namespace ucent {
namespace {

constexpr std::uint64_t kSamplesPerBlock = 256;

using Kernel = void (*)(const SimpleGraph&, std::span<double>, TraversalWorkspace&);

std::vector<double> sampled_sums(const UncertainGraph& g, const McConfig& cfg, Kernel kernel) {
  if (cfg.samples < 1) throw InvalidInput("Monte Carlo needs at least one sample");
  const std::size_t n = g.node_count();
  const std::uint64_t blocks = (cfg.samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<std::vector<double>> partial(blocks);

  parallel_for(blocks, cfg.workers, [&](std::size_t b) {
    std::vector<double> acc(n, 0.0);
    std::vector<Edge> edges;
    SimpleGraph world;
    TraversalWorkspace ws;
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min(cfg.samples, begin + kSamplesPerBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
      SplitMix64 rng(derive_seed(cfg.master_seed, i));
      sample_world_edges(g, rng, edges);
      world.assign(n, edges);
      kernel(world, acc, ws);
    }
    partial[b] = std::move(acc);
  });

  std::vector<double> total(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) total[v] += acc[v];
  }
  return total;
}

} // namespace

CentralityVector mc_harmonic(const UncertainGraph& g, const McConfig& cfg) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("harmonic closeness needs at least 2 nodes");
  CentralityVector out;
  out.scores = sampled_sums(g, cfg, &accumulate_harmonic);
  const double norm = static_cast<double>(cfg.samples) * static_cast<double>(n - 1);
  for (double& x : out.scores) x /= norm;
  out.provenance.method = "mc-harmonic";
  out.provenance.samples = cfg.samples;
  out.provenance.seed = cfg.master_seed;
  return out;
}

CentralityVector mc_betweenness(const UncertainGraph& g, const McConfig& cfg) {
  const std::size_t n = g.node_count();
  if (n < 3) throw InvalidInput("betweenness needs at least 3 nodes");
  CentralityVector out;
  out.scores = sampled_sums(g, cfg, &accumulate_brandes);
  const double norm = static_cast<double>(cfg.samples) * static_cast<double>(n - 1) *
                      static_cast<double>(n - 2);
  for (double& x : out.scores) x /= norm;
  out.provenance.method = "mc-betweenness";
  out.provenance.samples = cfg.samples;
  out.provenance.seed = cfg.master_seed;
  return out;
}

} // namespace ucent
