#include "ucent/scores_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "ucent/errors.hpp"

namespace ucent {
namespace {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

} // namespace

void write_scores(std::ostream& out, const CentralityVector& c, bool include_runtime) {
  const auto& p = c.provenance;
  out << "# method " << p.method << '\n';
  if (p.phi) out << "# phi " << format_double(*p.phi) << '\n';
  if (p.samples) out << "# samples " << *p.samples << '\n';
  if (p.seed) out << "# seed " << *p.seed << '\n';
  if (include_runtime) out << "# runtime_ms " << format_double(p.runtime_ms) << '\n';
  for (std::size_t v = 0; v < c.scores.size(); ++v) {
    out << v << ' ' << format_double(c.scores[v]) << '\n';
  }
}

CentralityVector read_scores(std::istream& in) {
  CentralityVector c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    if (line.front() == '#') {
      std::string hash, key, value;
      fields >> hash >> key >> value;
      if (key == "method") c.provenance.method = value;
      else if (key == "phi") c.provenance.phi = parse_number<double>(value, lineno, "phi");
      else if (key == "samples")
        c.provenance.samples = parse_number<std::uint64_t>(value, lineno, "samples");
      else if (key == "seed") c.provenance.seed = parse_number<std::uint64_t>(value, lineno, "seed");
      else if (key == "runtime_ms")
        c.provenance.runtime_ms = parse_number<double>(value, lineno, "runtime");
      continue;
    }
    std::string node, score, extra;
    fields >> node >> score;
    if (score.empty() || (fields >> extra)) throw ParseError(lineno, "expected 'node score'");
    const auto v = parse_number<std::size_t>(node, lineno, "node");
    if (v != c.scores.size()) {
      throw ParseError(lineno, "expected node " + std::to_string(c.scores.size()));
    }
    c.scores.push_back(parse_number<double>(score, lineno, "score"));
  }
  return c;
}

void save_scores(const CentralityVector& c, const std::filesystem::path& path,
                 bool include_runtime) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_scores(out, c, include_runtime);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

CentralityVector load_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_scores(in);
}

} // namespace ucent
