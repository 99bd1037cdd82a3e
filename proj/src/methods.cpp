#include "ucent/methods.hpp"

#include <chrono>

#include "ucent/deterministic.hpp"
#include "ucent/errors.hpp"
#include "ucent/monte_carlo.hpp"

namespace ucent {
namespace {

std::string_view family_name(Family f) {
  switch (f) {
  case Family::psp: return "psp";
  case Family::mc: return "mc";
  case Family::exact: return "exact";
  case Family::deterministic: return "deterministic";
  }
  return "";
}

SimpleGraph support_graph(const UncertainGraph& g) {
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.probability(e) > 0.0) edges.push_back(g.edge(e));
  }
  return SimpleGraph(g.node_count(), edges);
}

} // namespace

std::string MethodSpec::name() const {
  return std::string(family_name(family)) + "-" + std::string(to_string(measure));
}

MethodSpec parse_method(std::string_view name) {
  const auto dash = name.find('-');
  if (dash == std::string_view::npos) throw InvalidInput("unknown method '" + std::string(name) + "'");
  const auto family = name.substr(0, dash);
  MethodSpec spec;
  if (family == "psp") {
    spec.family = Family::psp;
  } else if (family == "mc") {
    spec.family = Family::mc;
  } else if (family == "exact") {
    spec.family = Family::exact;
  } else if (family == "deterministic") {
    spec.family = Family::deterministic;
  } else {
    throw InvalidInput("unknown method '" + std::string(name) + "'");
  }
  spec.measure = parse_measure(name.substr(dash + 1));
  return spec;
}

CentralityVector compute(const UncertainGraph& g, const MethodSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  CentralityVector out;
  const bool harmonic = spec.measure == Measure::harmonic;
  switch (spec.family) {
  case Family::psp:
    out = harmonic ? psp_harmonic_all(g, spec.phi, spec.workers)
                   : psp_betweenness_all(g, spec.phi, spec.workers);
    break;
  case Family::mc: {
    const McConfig cfg{spec.samples, spec.seed, spec.workers};
    out = harmonic ? mc_harmonic(g, cfg) : mc_betweenness(g, cfg);
    break;
  }
  case Family::exact:
    out = exact_expected_centrality(g, spec.measure, {spec.cap, spec.workers});
    break;
  case Family::deterministic: {
    const SimpleGraph sg = support_graph(g);
    out = harmonic ? harmonic_closeness(sg) : betweenness_brandes(sg);
    break;
  }
  }
  out.provenance.method = spec.name();
  out.provenance.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

} // namespace ucent
