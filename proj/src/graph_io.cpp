#include "ucent/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ucent/errors.hpp"

namespace ucent {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// "# nodes N" -> N
std::optional<std::size_t> parse_header(std::string_view line) {
  auto tokens = split_ws(line.substr(1));
  if (tokens.size() != 2 || tokens[0] != "nodes") return std::nullopt;
  return parse_number<std::size_t>(tokens[1]);
}

} // namespace

UncertainGraph read_graph(std::istream& in) {
  std::optional<std::size_t> declared_nodes;
  std::vector<WeightedEdge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t max_node_plus_one = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line_no == 1) declared_nodes = parse_header(line);
      continue;
    }

    auto tokens = split_ws(line);
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected \"u v p\", got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    auto u = parse_number<NodeId>(tokens[0]);
    auto v = parse_number<NodeId>(tokens[1]);
    auto p = parse_number<double>(tokens[2]);
    if (!u || !v) throw ParseError(line_no, "node ids must be non-negative integers");
    if (!p) throw ParseError(line_no, "probability is not a number");
    if (!(*p >= 0.0 && *p <= 1.0)) throw ParseError(line_no, "probability outside [0,1]");
    if (*u == *v) throw ParseError(line_no, "loop edge at node " + std::to_string(*u));
    const Edge e = canonical_edge(*u, *v);
    if (!seen.insert((static_cast<std::uint64_t>(e.u) << 32) | e.v).second) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
    }
    if (declared_nodes && e.v >= *declared_nodes) {
      throw ParseError(line_no, "node " + std::to_string(e.v) + " exceeds declared node count " +
                                    std::to_string(*declared_nodes));
    }
    max_node_plus_one = std::max<std::size_t>(max_node_plus_one, std::size_t{e.v} + 1);
    edges.push_back({*u, *v, *p});
  }
  return UncertainGraph(declared_nodes.value_or(max_node_plus_one), edges);
}

void write_graph(std::ostream& out, const UncertainGraph& g) {
  out << "# nodes " << g.node_count() << '\n';
  char buf[64];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge edge = g.edge(e);
    const auto res = std::to_chars(buf, buf + sizeof buf, g.probability(e));
    out << edge.u << ' ' << edge.v << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
  }
}

UncertainGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const UncertainGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, g);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

} // namespace ucent
