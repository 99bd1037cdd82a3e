#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ucent/centrality.hpp"
#include "ucent/possible_worlds.hpp"
#include "ucent/psp.hpp"
#include "ucent/uncertain_graph.hpp"

namespace ucent {

enum class Family { psp, mc, exact, deterministic };

/// A centrality method together with its parameters.
struct MethodSpec {
  Family family = Family::psp;
  Measure measure = Measure::harmonic;
  double phi = kDefaultPhi;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t cap = kDefaultEnumerationCap;

  /// "psp-harmonic", "mc-betweenness", "exact-harmonic", "deterministic-betweenness".
  std::string name() const;
};

/// Parses a method name of the form <family>-<measure>.
MethodSpec parse_method(std::string_view name);

/// Runs the method and records its wall-clock time in provenance.runtime_ms.
/// The deterministic family treats every edge with p > 0 as present.
CentralityVector compute(const UncertainGraph& g, const MethodSpec& spec);

} // namespace ucent
