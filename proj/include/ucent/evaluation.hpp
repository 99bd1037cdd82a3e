#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucent/centrality.hpp"
#include "ucent/methods.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

/// Mean absolute difference. Throws InvalidInput on a length mismatch or
/// empty input.
double mae(std::span<const double> a, std::span<const double> b);
double mae(const CentralityVector& a, const CentralityVector& b);

/// 1-based ranks in ascending order; tied values share their average rank.
std::vector<double> average_ranks(std::span<const double> x);

/// Spearman correlation of the rankings induced by a and b. Ties get average
/// ranks and the coefficient is the Pearson correlation of the rank vectors,
/// which equals 1 - 6 sum d^2 / (n(n^2-1)) when there are no ties. If either
/// ranking is constant the closed formula is used instead.
/// Throws InvalidInput on a length mismatch or fewer than 2 entries.
double scc(std::span<const double> a, std::span<const double> b);
double scc(const CentralityVector& a, const CentralityVector& b);

struct ExperimentReport {
  double mae = 0.0;
  double scc = 1.0;
  Provenance method_a;  // heuristic
  Provenance method_b;  // baseline
  double runtime_a_ms = 0.0;
  double runtime_b_ms = 0.0;
};

/// Compares two computed vectors.
ExperimentReport compare(const CentralityVector& heuristic, const CentralityVector& baseline);

/// Runs both methods on g, times them and compares the results.
ExperimentReport run_experiment(const UncertainGraph& g, const MethodSpec& heuristic,
                                const MethodSpec& baseline);

nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const ExperimentReport& r);

/// One line of a batch CSV.
struct CsvRow {
  std::string graph_id;
  std::string model;
  std::string prob_dist;
  std::string measure;
  std::string method;
  std::string phi_or_samples;
  std::string seed;
  double mae = 0.0;
  double scc = 0.0;
  double runtime_ms_heuristic = 0.0;
  double runtime_ms_baseline = 0.0;
};

inline constexpr const char* kCsvHeader =
    "graph_id,model,prob_dist,measure,method,phi_or_samples,seed,mae,scc,"
    "runtime_ms_heuristic,runtime_ms_baseline";

/// Writes one row. With include_runtime false the two runtime fields are left
/// empty so reruns produce identical files.
void write_csv_row(std::ostream& out, const CsvRow& row, bool include_runtime = true);

/// Fills the method columns of a row from a report.
CsvRow csv_row(const ExperimentReport& r, std::string graph_id, std::string model,
               std::string prob_dist);

struct BatchSummary {
  std::size_t count = 0;
  double mean_mae = 0.0;
  double mean_scc = 0.0;
  double mean_runtime_a_ms = 0.0;
  double mean_runtime_b_ms = 0.0;
};

BatchSummary aggregate(std::span<const ExperimentReport> reports);

} // namespace ucent
