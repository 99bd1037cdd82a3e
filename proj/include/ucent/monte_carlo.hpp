#pragma once

#include <cstddef>
#include <cstdint>

#include "ucent/centrality.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

struct McConfig {
  std::uint64_t samples = 1;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
};

/// Sample counts used in published comparisons of the PSP heuristics.
inline constexpr std::uint64_t kDefaultHarmonicSamples = 73777;
inline constexpr std::uint64_t kDefaultBetweennessSamples = 100000;

// Sample i draws its world from a generator seeded with
// derive_seed(master_seed, i). Samples are grouped into fixed-size blocks whose
// sums are reduced in block order, so the output depends only on
// (graph, samples, master_seed) and never on the worker count.

/// Mean harmonic closeness over sampled worlds. Requires at least 2 nodes.
CentralityVector mc_harmonic(const UncertainGraph& g, const McConfig& cfg);

/// Mean Brandes betweenness over sampled worlds. Requires at least 3 nodes.
CentralityVector mc_betweenness(const UncertainGraph& g, const McConfig& cfg);

} // namespace ucent
