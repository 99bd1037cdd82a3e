#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "ucent/centrality.hpp"
#include "ucent/deterministic.hpp"
#include "ucent/random.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

/// Probability mass of the s-t distance over {1, ..., |V|-1, infinity}.
///
/// `mass` has |V| entries; mass[k] is the probability of distance k and
/// mass[0] is always 0. The same type holds exact and estimated distributions.
struct DistanceDistribution {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<double> mass;
  double mass_inf = 0.0;

  DistanceDistribution() = default;
  DistanceDistribution(NodeId s, NodeId t, std::size_t node_count)
      : source(s), target(t), mass(node_count, 0.0) {}

  /// Largest finite distance that can carry mass (|V|-1).
  Hops max_length() const noexcept {
    return mass.empty() ? 0 : static_cast<Hops>(mass.size() - 1);
  }
  /// Mass at k; k == kUnreachable reads mass_inf.
  double at(Hops k) const { return k == kUnreachable ? mass_inf : mass[k]; }
  double finite_total() const;
  double total() const { return finite_total() + mass_inf; }
};

/// Expected distance conditioned on s and t being connected; +infinity when
/// mass_inf is 1 (or no finite mass exists).
double distance_er(const DistanceDistribution& d);

/// Largest D in {1, ..., |V|-1} whose cumulative mass is at most 1/2.
/// Returns 1 when mass[1] alone exceeds 1/2.
Hops distance_median(const DistanceDistribution& d);

/// Most probable distance. Ties go to the smallest finite D; infinity only
/// wins when its mass is strictly larger than every finite entry.
Hops distance_majority(const DistanceDistribution& d);

inline constexpr std::size_t kDefaultEnumerationCap = 20;

struct EnumerationOptions {
  /// Refuse graphs with more uncertain edges (0 < p < 1) than this.
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t workers = 1;
};

/// Number of worlds that enumeration would visit: 2^(uncertain edges).
/// Throws CapExceeded above the cap.
std::uint64_t world_count(const UncertainGraph& g, std::size_t cap = kDefaultEnumerationCap);

/// Visits every possible world of `g` exactly once together with its
/// probability. The world object is reused between calls; copy it to keep it.
/// Throws CapExceeded before visiting anything when the cap is exceeded.
void for_each_world(const UncertainGraph& g,
                    const std::function<void(const PossibleWorld&, double)>& visit,
                    std::size_t cap = kDefaultEnumerationCap);

/// p_{s,t}(k) = sum of Pr(G) over worlds G with d_G(s,t) = k.
DistanceDistribution exact_distance_distribution(const UncertainGraph& g, NodeId s, NodeId t,
                                                 const EnumerationOptions& opts = {});

/// sum_G Pr(G) * centrality(G), per node.
CentralityVector exact_expected_centrality(const UncertainGraph& g, Measure measure,
                                           const EnumerationOptions& opts = {});

/// Appends the edges of one sampled world to `out` (cleared first). Draws one
/// uniform number per uncertain edge, in edge order.
void sample_world_edges(const UncertainGraph& g, SplitMix64& rng, std::vector<Edge>& out);

/// Each edge present independently with its probability.
PossibleWorld sample_world(const UncertainGraph& g, SplitMix64& rng);

} // namespace ucent
