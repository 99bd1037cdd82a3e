#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ucent/uncertain_graph.hpp"

namespace ucent {

/// Graph structure without probabilities.
struct Topology {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

struct ErModel {
  std::size_t n = 1;
  double p = 0.0;
};

struct BaModel {
  std::size_t n = 2;
  std::size_t m = 1;
};

struct RhModel {
  std::size_t n = 1;
  double k = 6.0;
  double gamma = 3.0;
};

using GraphModel = std::variant<ErModel, BaModel, RhModel>;

struct ProbDist {
  enum class Kind { uniform01, beta44, constant };
  Kind kind = Kind::uniform01;
  double constant = 1.0;

  static ProbDist uniform() { return {Kind::uniform01, 1.0}; }
  static ProbDist beta() { return {Kind::beta44, 1.0}; }
  static ProbDist fixed(double c) { return {Kind::constant, c}; }
};

struct GenSpec {
  GraphModel model = ErModel{};
  ProbDist prob = ProbDist::uniform();
  std::uint64_t seed = 0;
};

/// Throws InvalidInput unless the parameters satisfy n >= 1, p in [0,1],
/// 1 <= m < n, k > 0 and gamma > 2.
void validate(const GraphModel& model);
void validate(const ProbDist& dist);

/// "ER(100,0.05)", "BA(100,5)", "RH(100,6,3)".
std::string describe(const GraphModel& model);
/// "uniform", "beta", "constant(0.5)".
std::string describe(const ProbDist& dist);
/// Accepts "uniform", "beta", "constant:<c>" or a bare number.
ProbDist parse_prob_dist(const std::string& text);

/// Every pair present independently with probability p.
Topology gen_er(std::size_t n, double p, std::mt19937_64& rng);

/// Preferential attachment. Starts from a cycle on m nodes (a path when
/// m <= 2), then attaches each further node to m distinct existing nodes
/// drawn with probability proportional to degree.
Topology gen_ba(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Threshold random hyperbolic graph: n points in a disk of radius R with
/// radial density alpha*sinh(alpha r)/(cosh(alpha R) - 1), alpha = (gamma-1)/2,
/// and uniform angles; an edge joins points at hyperbolic distance <= R.
Topology gen_rh(std::size_t n, double k, double gamma, std::mt19937_64& rng);

/// Disk radius targeting average degree k.
double rh_target_radius(std::size_t n, double k, double gamma);

/// I.i.d. edge probabilities; Beta(4,4) draws are X/(X+Y) with X, Y ~ Gamma(4,1).
UncertainGraph assign_probabilities(const Topology& topology, const ProbDist& dist,
                                    std::mt19937_64& rng);

Topology generate_topology(const GraphModel& model, std::mt19937_64& rng);

/// Deterministic in `spec`: topology and probabilities use independent
/// streams derived from spec.seed.
UncertainGraph generate(const GenSpec& spec);

} // namespace ucent
