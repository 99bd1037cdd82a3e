#include "ucent/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include "ucent/errors.hpp"

namespace ucent {
namespace {

void check_lengths(std::size_t a, std::size_t b, std::size_t minimum) {
  if (a != b) {
    throw InvalidInput("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
  if (a < minimum) {
    throw InvalidInput("need at least " + std::to_string(minimum) + " values, got " +
                       std::to_string(a));
  }
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string method_parameter(const Provenance& p) {
  if (p.phi) return format_double(*p.phi);
  if (p.samples) return std::to_string(*p.samples);
  return "";
}

} // namespace

double mae(std::span<const double> a, std::span<const double> b) {
  check_lengths(a.size(), b.size(), 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double mae(const CentralityVector& a, const CentralityVector& b) { return mae(a.scores, b.scores); }

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
    i = j + 1;
  }
  return rank;
}

double scc(std::span<const double> a, std::span<const double> b) {
  check_lengths(a.size(), b.size(), 2);
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;

  double sab = 0.0, saa = 0.0, sbb = 0.0, d2 = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
    d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
  }
  const double closed = 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
  if (saa == 0.0 || sbb == 0.0) return std::clamp(closed, -1.0, 1.0);
  // Without ties both variances equal n(n^2-1)/12 and the closed formula is
  // exact; returning it keeps such results bit-identical to the textbook value.
  const double untied = n * (n * n - 1.0) / 12.0;
  if (saa == untied && sbb == untied) return closed;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double scc(const CentralityVector& a, const CentralityVector& b) { return scc(a.scores, b.scores); }

ExperimentReport compare(const CentralityVector& heuristic, const CentralityVector& baseline) {
  ExperimentReport r;
  r.mae = mae(heuristic, baseline);
  r.scc = heuristic.size() >= 2 ? scc(heuristic, baseline) : 1.0;
  r.method_a = heuristic.provenance;
  r.method_b = baseline.provenance;
  r.runtime_a_ms = heuristic.provenance.runtime_ms;
  r.runtime_b_ms = baseline.provenance.runtime_ms;
  return r;
}

ExperimentReport run_experiment(const UncertainGraph& g, const MethodSpec& heuristic,
                                const MethodSpec& baseline) {
  const auto a = compute(g, heuristic);
  const auto b = compute(g, baseline);
  return compare(a, b);
}

nlohmann::json to_json(const Provenance& p) {
  nlohmann::json j;
  j["method"] = p.method;
  if (p.phi) j["phi"] = *p.phi;
  if (p.samples) j["samples"] = *p.samples;
  if (p.seed) j["seed"] = *p.seed;
  j["runtime_ms"] = p.runtime_ms;
  return j;
}

nlohmann::json to_json(const ExperimentReport& r) {
  return {
      {"mae", r.mae},
      {"scc", r.scc},
      {"method_a", to_json(r.method_a)},
      {"method_b", to_json(r.method_b)},
      {"runtime_a_ms", r.runtime_a_ms},
      {"runtime_b_ms", r.runtime_b_ms},
  };
}

CsvRow csv_row(const ExperimentReport& r, std::string graph_id, std::string model,
               std::string prob_dist) {
  CsvRow row;
  row.graph_id = std::move(graph_id);
  row.model = std::move(model);
  row.prob_dist = std::move(prob_dist);
  const auto dash = r.method_a.method.find('-');
  row.measure = dash == std::string::npos ? "" : r.method_a.method.substr(dash + 1);
  row.method = r.method_a.method;
  row.phi_or_samples = method_parameter(r.method_a);
  if (r.method_b.seed) row.seed = std::to_string(*r.method_b.seed);
  else if (r.method_a.seed) row.seed = std::to_string(*r.method_a.seed);
  row.mae = r.mae;
  row.scc = r.scc;
  row.runtime_ms_heuristic = r.runtime_a_ms;
  row.runtime_ms_baseline = r.runtime_b_ms;
  return row;
}

void write_csv_row(std::ostream& out, const CsvRow& row, bool include_runtime) {
  out << csv_field(row.graph_id) << ',' << csv_field(row.model) << ',' << csv_field(row.prob_dist)
      << ',' << csv_field(row.measure) << ',' << csv_field(row.method) << ','
      << csv_field(row.phi_or_samples) << ',' << csv_field(row.seed) << ','
      << format_double(row.mae) << ',' << format_double(row.scc) << ',';
  if (include_runtime) {
    out << format_double(row.runtime_ms_heuristic) << ',' << format_double(row.runtime_ms_baseline);
  } else {
    out << ',';
  }
  out << '\n';
}

BatchSummary aggregate(std::span<const ExperimentReport> reports) {
  BatchSummary s;
  s.count = reports.size();
  if (reports.empty()) return s;
  for (const auto& r : reports) {
    s.mean_mae += r.mae;
    s.mean_scc += r.scc;
    s.mean_runtime_a_ms += r.runtime_a_ms;
    s.mean_runtime_b_ms += r.runtime_b_ms;
  }
  const double n = static_cast<double>(reports.size());
  s.mean_mae /= n;
  s.mean_scc /= n;
  s.mean_runtime_a_ms /= n;
  s.mean_runtime_b_ms /= n;
  return s;
}

} // namespace ucent
