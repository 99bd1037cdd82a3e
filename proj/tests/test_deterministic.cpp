#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ucent/deterministic.hpp"
#include "ucent/errors.hpp"

using namespace ucent;

namespace {

SimpleGraph simple(const UncertainGraph& g) { return SimpleGraph(PossibleWorld::full(g)); }

// Harmonic closeness from Floyd-Warshall distances.
std::vector<double> harmonic_oracle(std::size_t n, const std::vector<Edge>& edges) {
  const auto d = testing::floyd(n, edges);
  std::vector<double> h(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < n; ++s)
      if (s != v && d[s][v] > 0) h[v] += 1.0 / d[s][v];
    h[v] /= static_cast<double>(n - 1);
  }
  return h;
}

} // namespace

TEST_CASE("bfs distances") {
  const auto d = bfs_distances(simple(testing::path(3)), 0);
  CHECK(d.dist == std::vector<Hops>{0, 1, 2});
  const auto iso = bfs_distances(simple(UncertainGraph(2)), 0);
  CHECK(iso.dist == std::vector<Hops>{0, kUnreachable});
  const auto fig4 =
      testing::make_graph(4, {{0, 1, 1}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.7}, {1, 3, 0.6}});
  CHECK(bfs_distances(PossibleWorld::full(fig4), 0).dist[3] == 2);
  CHECK_THROWS_AS(bfs_distances(simple(testing::path(3)), 3), InvalidInput);
}

TEST_CASE("harmonic closeness closed forms") {
  const auto s5 = harmonic_closeness(simple(testing::star(5)));
  CHECK(s5[0] == 1.0);
  for (int v = 1; v < 5; ++v) CHECK(s5[v] == 0.625);
  const auto two = harmonic_closeness(SimpleGraph(2, {}));
  CHECK(two[0] == 0.0);
  CHECK(two[1] == 0.0);
  const auto k6 = harmonic_closeness(simple(testing::complete(6)));
  for (int v = 0; v < 6; ++v) CHECK(k6[v] == 1.0);
  CHECK_THROWS_AS(harmonic_closeness(SimpleGraph(1, {})), InvalidInput);
}

TEST_CASE("betweenness closed forms") {
  const auto s5 = betweenness_brandes(simple(testing::star(5)));
  CHECK(s5[0] == 1.0);
  for (int v = 1; v < 5; ++v) CHECK(s5[v] == 0.0);
  CHECK(betweenness_naive(simple(testing::star(4)))[0] == 1.0);

  const auto tri = betweenness_brandes(simple(testing::complete(3)));
  for (int v = 0; v < 3; ++v) CHECK(tri[v] == 0.0);

  const auto p4 = betweenness_brandes(simple(testing::path(4)));
  CHECK(p4[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p4[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p4[0] == 0.0);

  // Two components: the disconnected pairs add nothing.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
  const auto split = betweenness_naive(SimpleGraph(5, e));
  CHECK(split[1] == doctest::Approx(2.0 / 12.0).epsilon(1e-15));
  CHECK(split[3] == 0.0);

  CHECK_THROWS_AS(betweenness_brandes(SimpleGraph(2, {})), InvalidInput);
  CHECK_THROWS_AS(betweenness_naive(SimpleGraph(2, {})), InvalidInput);
}

TEST_CASE("property: Brandes equals naive on random worlds") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_certain_graph(12, 0.3, rng);
    const auto sg = simple(g);
    const auto b = betweenness_brandes(sg);
    const auto nv = betweenness_naive(sg);
    for (std::size_t v = 0; v < 12; ++v) {
      CHECK(std::abs(b[v] - nv[v]) <= 1e-12);
      CHECK(b[v] >= 0.0);
      CHECK(b[v] <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("property: harmonic closeness matches all-pairs distances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_certain_graph(10, 0.25, rng);
    const auto edges = testing::support_edges(g);
    const auto h = harmonic_closeness(SimpleGraph(10, edges));
    const auto oracle = harmonic_oracle(10, edges);
    for (std::size_t v = 0; v < 10; ++v) {
      CHECK(std::abs(h[v] - oracle[v]) <= 1e-12);
      CHECK(h[v] >= 0.0);
      CHECK(h[v] <= 1.0);
    }
  }
}

TEST_CASE("world overloads skip absent edges") {
  const auto g = testing::make_graph(3, {{0, 1, 0.5}, {1, 2, 0.5}});
  PossibleWorld w(g);
  w.set(0, true);
  const auto d = bfs_distances(w, 0);
  CHECK(d.dist == std::vector<Hops>{0, 1, kUnreachable});
  CHECK(betweenness_brandes(w)[1] == 0.0);
  CHECK(harmonic_closeness(w)[2] == 0.0);
}
