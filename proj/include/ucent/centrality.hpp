#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucent {

enum class Measure { harmonic, betweenness };

std::string_view to_string(Measure m);
/// Accepts "harmonic" and "betweenness"; throws InvalidInput otherwise.
Measure parse_measure(std::string_view name);

/// Where a score vector came from.
struct Provenance {
  std::string method;              // e.g. "psp-harmonic", "mc-betweenness"
  std::optional<double> phi;       // PSP threshold
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  double runtime_ms = 0.0;
};

/// Per-node scores of one centrality measure.
struct CentralityVector {
  std::vector<double> scores;
  Provenance provenance;

  std::size_t size() const noexcept { return scores.size(); }
  double operator[](std::size_t v) const { return scores[v]; }
};

} // namespace ucent
