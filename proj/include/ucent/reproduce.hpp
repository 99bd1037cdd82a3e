#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ucent/evaluation.hpp"
#include "ucent/generators.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

/// s=0, v1=1, v2=2, t=3; s-v1 1, s-v2 1, v1-t 0.9, v2-t 0.9.
UncertainGraph figure3_graph();
/// s=0, v1=1, v2=2, t=3; s-v1 1, s-v2 0.5, v1-v2 0.5, v2-t 0.7, v1-t 0.6.
UncertainGraph figure4_graph();

/// Writes the PSP trace and exact distance distribution of (0,3) on both
/// example graphs as a JSON document.
void write_figure_examples(std::ostream& out);

struct SweepConfig {
  std::size_t nodes = 100;
  std::size_t graphs = 10;          // per (model, prob_dist) cell
  std::uint64_t samples = 10000;    // Monte Carlo ground truth
  std::vector<double> phis = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<Measure> measures = {Measure::harmonic, Measure::betweenness};
  std::uint64_t master_seed = 1;
  std::size_t workers = 1;
};

/// ER(n,0.05), BA(n,5), RH(n,6,3), each with uniform and Beta(4,4) probabilities.
std::vector<GraphModel> sweep_models(std::size_t nodes);
std::vector<ProbDist> sweep_distributions();

struct SweepRecord {
  std::string graph_id;
  std::string model;
  std::string prob_dist;
  Measure measure = Measure::harmonic;
  ExperimentReport report;
};

/// PSP at every phi against Monte Carlo on every generated graph. Records are
/// ordered by model, distribution, graph, measure, phi. Graph j of cell c uses
/// seed derive_seed(master_seed, c * graphs + j); its Monte Carlo run is
/// seeded with derive_seed(graph seed, 2).
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// Per-graph rows, then one mean row per (model, prob_dist, phi) with
/// graph_id "mean", restricted to one measure.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, Measure measure,
                     bool include_runtime);
void write_sweep_summary_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                             Measure measure, bool include_runtime);

} // namespace ucent
