#pragma once

#include <filesystem>
#include <iosfwd>

#include "ucent/uncertain_graph.hpp"

namespace ucent {

// Edge-list format:
//
//   # nodes N        optional, first line only; fixes node_count
//   # anything       comment
//   u v p            one edge per line, integers u,v and probability p
//
// Without the header node_count is 1 + the largest node index.
// Probabilities are written in shortest round-trip form, so save followed by
// load reproduces every double bit for bit.

UncertainGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const UncertainGraph& g);

/// Throws ParseError (with the offending line) or Error when the file cannot
/// be opened.
UncertainGraph load_graph(const std::filesystem::path& path);
void save_graph(const UncertainGraph& g, const std::filesystem::path& path);

} // namespace ucent
