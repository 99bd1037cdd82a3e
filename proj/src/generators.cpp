#include "ucent/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ucent/errors.hpp"
#include "ucent/random.hpp"

namespace ucent {
namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::string number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

} // namespace

void validate(const GraphModel& model) {
  std::visit(Overload{
                 [](const ErModel& m) {
                   if (m.n < 1) throw InvalidInput("ER needs n >= 1");
                   if (!(m.p >= 0.0 && m.p <= 1.0)) throw InvalidInput("ER needs p in [0,1]");
                 },
                 [](const BaModel& m) {
                   if (m.m < 1 || m.m >= m.n) throw InvalidInput("BA needs 1 <= m < n");
                 },
                 [](const RhModel& m) {
                   if (m.n < 1) throw InvalidInput("RH needs n >= 1");
                   if (!(m.k > 0.0)) throw InvalidInput("RH needs k > 0");
                   if (!(m.gamma > 2.0)) throw InvalidInput("RH needs gamma > 2");
                 },
             },
             model);
}

void validate(const ProbDist& dist) {
  if (dist.kind == ProbDist::Kind::constant && !(dist.constant >= 0.0 && dist.constant <= 1.0)) {
    throw InvalidInput("constant probability must lie in [0,1]");
  }
}

std::string describe(const GraphModel& model) {
  return std::visit(
      Overload{
          [](const ErModel& m) { return "ER(" + std::to_string(m.n) + "," + number(m.p) + ")"; },
          [](const BaModel& m) {
            return "BA(" + std::to_string(m.n) + "," + std::to_string(m.m) + ")";
          },
          [](const RhModel& m) {
            return "RH(" + std::to_string(m.n) + "," + number(m.k) + "," + number(m.gamma) + ")";
          },
      },
      model);
}

std::string describe(const ProbDist& dist) {
  switch (dist.kind) {
  case ProbDist::Kind::uniform01: return "uniform";
  case ProbDist::Kind::beta44: return "beta";
  case ProbDist::Kind::constant: return "constant(" + number(dist.constant) + ")";
  }
  return "";
}

ProbDist parse_prob_dist(const std::string& text) {
  if (text == "uniform" || text == "uniform01") return ProbDist::uniform();
  if (text == "beta" || text == "beta44") return ProbDist::beta();
  std::string value = text;
  if (value.rfind("constant:", 0) == 0) value = value.substr(9);
  double c = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw InvalidInput("unknown probability distribution '" + text + "'");
  }
  ProbDist out = ProbDist::fixed(c);
  validate(out);
  return out;
}

Topology gen_er(std::size_t n, double p, std::mt19937_64& rng) {
  validate(ErModel{n, p});
  Topology out{n, {}};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < p) out.edges.push_back({u, v});
    }
  }
  return out;
}

Topology gen_ba(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  validate(BaModel{n, m});
  Topology out{n, {}};
  // Each node appears once per incident edge, so a uniform pick from `ends`
  // is a degree-proportional pick.
  std::vector<NodeId> ends;
  auto link = [&](NodeId a, NodeId b) {
    out.edges.push_back(canonical_edge(a, b));
    ends.push_back(a);
    ends.push_back(b);
  };

  for (NodeId v = 0; v + 1 < m; ++v) link(v, v + 1);
  if (m >= 3) link(static_cast<NodeId>(m - 1), 0);

  std::vector<NodeId> targets;
  for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      NodeId pick;
      if (ends.empty()) {
        pick = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
      } else {
        pick = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
      }
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (NodeId t : targets) link(t, v);
  }
  return out;
}

double rh_target_radius(std::size_t n, double k, double gamma) {
  const double xi_inv = (gamma - 2.0) / (gamma - 1.0);
  const double v = k * (std::numbers::pi / 2.0) * xi_inv * xi_inv;
  return 2.0 * std::log(static_cast<double>(n) / v);
}

Topology gen_rh(std::size_t n, double k, double gamma, std::mt19937_64& rng) {
  validate(RhModel{n, k, gamma});
  Topology out{n, {}};
  if (n < 2) return out;

  const double alpha = (gamma - 1.0) / 2.0;
  const double radius = rh_target_radius(n, k, gamma);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radial(1.0, std::cosh(alpha * radius));

  std::vector<double> angle(n), cosh_r(n), sinh_r(n);
  for (std::size_t i = 0; i < n; ++i) {
    angle[i] = angle_dist(rng);
    const double r = std::acosh(radial(rng)) / alpha;
    cosh_r[i] = std::cosh(r);
    sinh_r[i] = std::sinh(r);
  }

  // cosh d = cosh r1 cosh r2 - sinh r1 sinh r2 cos(dtheta); compare in cosh space.
  const double threshold = std::cosh(radius);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double c =
          cosh_r[u] * cosh_r[v] - sinh_r[u] * sinh_r[v] * std::cos(angle[u] - angle[v]);
      if (c <= threshold) out.edges.push_back({u, v});
    }
  }
  return out;
}

UncertainGraph assign_probabilities(const Topology& topology, const ProbDist& dist,
                                    std::mt19937_64& rng) {
  validate(dist);
  std::vector<WeightedEdge> edges;
  edges.reserve(topology.edges.size());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::gamma_distribution<double> shape4(4.0, 1.0);
  for (const Edge& e : topology.edges) {
    double p = dist.constant;
    if (dist.kind == ProbDist::Kind::uniform01) {
      p = unit(rng);
    } else if (dist.kind == ProbDist::Kind::beta44) {
      const double x = shape4(rng);
      const double y = shape4(rng);
      p = x / (x + y);
    }
    edges.push_back({e.u, e.v, p});
  }
  return UncertainGraph(topology.node_count, edges);
}

Topology generate_topology(const GraphModel& model, std::mt19937_64& rng) {
  return std::visit(Overload{
                        [&](const ErModel& m) { return gen_er(m.n, m.p, rng); },
                        [&](const BaModel& m) { return gen_ba(m.n, m.m, rng); },
                        [&](const RhModel& m) { return gen_rh(m.n, m.k, m.gamma, rng); },
                    },
                    model);
}

UncertainGraph generate(const GenSpec& spec) {
  validate(spec.model);
  validate(spec.prob);
  std::mt19937_64 topo_rng(derive_seed(spec.seed, 0));
  std::mt19937_64 prob_rng(derive_seed(spec.seed, 1));
  return assign_probabilities(generate_topology(spec.model, topo_rng), spec.prob, prob_rng);
}

} // namespace ucent
