#include "ucent/centrality.hpp"

#include <string>

#include "ucent/errors.hpp"

namespace ucent {

std::string_view to_string(Measure m) {
  return m == Measure::harmonic ? "harmonic" : "betweenness";
}

Measure parse_measure(std::string_view name) {
  if (name == "harmonic") return Measure::harmonic;
  if (name == "betweenness") return Measure::betweenness;
  throw InvalidInput("unknown measure '" + std::string(name) + "'");
}

} // namespace ucent
