#include "ucent/reproduce.hpp"

#include <cmath>
#include <map>
#include <ostream>

#include "ucent/possible_worlds.hpp"
#include "ucent/psp.hpp"
#include "ucent/random.hpp"

namespace ucent {
namespace {

nlohmann::json distribution_json(const DistanceDistribution& d) {
  nlohmann::json mass = nlohmann::json::object();
  for (Hops k = 1; k <= d.max_length(); ++k) {
    if (d.mass[k] != 0.0) mass[std::to_string(k)] = d.mass[k];
  }
  const double er = distance_er(d);
  return {
      {"mass", mass},
      {"mass_inf", d.mass_inf},
      {"d_er", std::isinf(er) ? nlohmann::json("inf") : nlohmann::json(er)},
  };
}

nlohmann::json example_json(const UncertainGraph& g) {
  const auto trace = psp_explore_distance(g, 0, 3, kDefaultPhi);
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : trace.rounds) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : r.min_edges) edges.push_back({e.u, e.v});
    rounds.push_back({{"length", r.length},
                      {"abs_probs", r.abs_probs},
                      {"rel_probs", r.rel_probs},
                      {"deleted_edges", edges},
                      {"capped", r.capped}});
  }
  return {
      {"pair", {0, 3}},
      {"phi", kDefaultPhi},
      {"psp", {{"rounds", rounds},
               {"connection_probability", trace.connection_probability},
               {"distribution", distribution_json(trace.distribution)}}},
      {"exact", distribution_json(exact_distance_distribution(g, 0, 3))},
  };
}

} // namespace

UncertainGraph figure3_graph() {
  const WeightedEdge edges[] = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 0.9}, {2, 3, 0.9}};
  return UncertainGraph(4, edges);
}

UncertainGraph figure4_graph() {
  const WeightedEdge edges[] = {{0, 1, 1.0}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.7}, {1, 3, 0.6}};
  return UncertainGraph(4, edges);
}

void write_figure_examples(std::ostream& out) {
  const nlohmann::json doc = {
      {"figure3", example_json(figure3_graph())},
      {"figure4", example_json(figure4_graph())},
  };
  out << doc.dump(2) << '\n';
}

std::vector<GraphModel> sweep_models(std::size_t nodes) {
  return {ErModel{nodes, 0.05}, BaModel{nodes, 5}, RhModel{nodes, 6.0, 3.0}};
}

std::vector<ProbDist> sweep_distributions() { return {ProbDist::uniform(), ProbDist::beta()}; }

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRecord> out;
  const auto models = sweep_models(cfg.nodes);
  const auto dists = sweep_distributions();
  std::uint64_t cell = 0;
  for (const auto& model : models) {
    for (const auto& dist : dists) {
      for (std::size_t j = 0; j < cfg.graphs; ++j) {
        const std::uint64_t seed = derive_seed(cfg.master_seed, cell * cfg.graphs + j);
        const UncertainGraph g = generate({model, dist, seed});
        const std::string graph_id = describe(model) + "/" + describe(dist) + "/" + std::to_string(j);

        for (Measure measure : cfg.measures) {
          MethodSpec baseline;
          baseline.family = Family::mc;
          baseline.measure = measure;
          baseline.samples = cfg.samples;
          baseline.seed = derive_seed(seed, 2);
          baseline.workers = cfg.workers;
          const auto truth = compute(g, baseline);

          for (double phi : cfg.phis) {
            MethodSpec heuristic;
            heuristic.family = Family::psp;
            heuristic.measure = measure;
            heuristic.phi = phi;
            heuristic.workers = cfg.workers;
            out.push_back({graph_id, describe(model), describe(dist), measure,
                           compare(compute(g, heuristic), truth)});
          }
        }
      }
      ++cell;
    }
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, Measure measure,
                     bool include_runtime) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    if (r.measure != measure) continue;
    write_csv_row(out, csv_row(r.report, r.graph_id, r.model, r.prob_dist), include_runtime);
  }
}

void write_sweep_summary_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                             Measure measure, bool include_runtime) {
  // Keyed by first appearance so rows keep the sweep order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SweepRecord*>> groups;
  for (const auto& r : records) {
    if (r.measure != measure) continue;
    const std::string key = r.model + "|" + r.prob_dist + "|" + std::to_string(*r.report.method_a.phi);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&r);
  }
  out << kCsvHeader << '\n';
  for (const auto& key : order) {
    const auto& group = groups[key];
    std::vector<ExperimentReport> reports;
    for (const auto* r : group) reports.push_back(r->report);
    const auto summary = aggregate(reports);
    CsvRow row = csv_row(group.front()->report, "mean", group.front()->model,
                         group.front()->prob_dist);
    row.seed.clear();
    row.mae = summary.mean_mae;
    row.scc = summary.mean_scc;
    row.runtime_ms_heuristic = summary.mean_runtime_a_ms;
    row.runtime_ms_baseline = summary.mean_runtime_b_ms;
    write_csv_row(out, row, include_runtime);
  }
}

} // namespace ucent
