#pragma once

#include <filesystem>
#include <iosfwd>

#include "ucent/centrality.hpp"

namespace ucent {

// Scores file:
//
//   # method psp-betweenness
//   # phi 0.8              only for PSP
//   # samples 10000        only for Monte Carlo
//   # seed 7               only for Monte Carlo
//   # runtime_ms 12.5      only when requested
//   0 0.125
//   1 0
//
// Numbers are written in shortest round-trip form.

void write_scores(std::ostream& out, const CentralityVector& c, bool include_runtime = false);
/// Node ids must be 0..n-1 in order. Throws ParseError.
CentralityVector read_scores(std::istream& in);

void save_scores(const CentralityVector& c, const std::filesystem::path& path,
                 bool include_runtime = false);
CentralityVector load_scores(const std::filesystem::path& path);

} // namespace ucent
