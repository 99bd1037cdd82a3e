#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "ucent/deterministic.hpp"
#include "ucent/errors.hpp"
#include "ucent/monte_carlo.hpp"
#include "ucent/possible_worlds.hpp"

using namespace ucent;

namespace {

UncertainGraph figure4() {
  return testing::make_graph(4, {{0, 1, 1}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.7}, {1, 3, 0.6}});
}

} // namespace

TEST_CASE("certain graphs give the deterministic values") {
  std::mt19937_64 rng(1);
  const auto g = testing::random_certain_graph(15, 0.25, rng);
  const SimpleGraph sg(PossibleWorld::full(g));
  const auto h = harmonic_closeness(sg);
  const auto b = betweenness_brandes(sg);
  for (std::uint64_t r : {1, 7, 300}) {
    const auto mh = mc_harmonic(g, {r, 5, 2});
    const auto mb = mc_betweenness(g, {r, 5, 2});
    for (std::size_t v = 0; v < 15; ++v) {
      // Equal up to the rounding of r-fold summation.
      CHECK(std::abs(mh[v] - h[v]) <= 1e-12);
      CHECK(std::abs(mb[v] - b[v]) <= 1e-12);
    }
  }
  const auto s5 = mc_betweenness(testing::star(5), {100, 0, 1});
  CHECK(s5[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("provenance and preconditions") {
  const auto mh = mc_harmonic(figure4(), {10, 77, 1});
  CHECK(mh.provenance.method == "mc-harmonic");
  CHECK(mh.provenance.samples == 10);
  CHECK(mh.provenance.seed == 77);
  CHECK_THROWS_AS(mc_harmonic(UncertainGraph(1), {10, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(mc_betweenness(testing::path(2), {10, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(mc_harmonic(figure4(), {0, 0, 1}), InvalidInput);
}

TEST_CASE("converges to the exact oracle") {
  const auto two = testing::make_graph(2, {{0, 1, 0.5}});
  const auto h2 = mc_harmonic(two, {200000, 3, 4});
  CHECK(std::abs(h2[0] - 0.5) <= 0.005);
  CHECK(std::abs(h2[1] - 0.5) <= 0.005);

  const auto g = figure4();
  const auto eh = exact_expected_centrality(g, Measure::harmonic);
  const auto eb = exact_expected_centrality(g, Measure::betweenness);
  const auto mh = mc_harmonic(g, {200000, 11, 4});
  const auto mb = mc_betweenness(g, {200000, 12, 4});
  for (std::size_t v = 0; v < 4; ++v) {
    CHECK(std::abs(mh[v] - eh[v]) <= 0.005);
    CHECK(std::abs(mb[v] - eb[v]) <= 0.005);
  }
}

TEST_CASE("property: unbiased across disjoint seed batches") {
  // Averages over independent batches approach the oracle; the bound is 4
  // standard errors of a quantity in [0,1] over 8 * 20000 samples.
  const auto g = figure4();
  const auto eb = exact_expected_centrality(g, Measure::betweenness);
  std::vector<double> mean(4, 0.0);
  for (std::uint64_t batch = 0; batch < 8; ++batch) {
    const auto mb = mc_betweenness(g, {20000, 1000 + batch, 1});
    for (std::size_t v = 0; v < 4; ++v) mean[v] += mb[v] / 8.0;
  }
  const double bound = 4.0 * 0.5 / std::sqrt(8.0 * 20000.0);
  for (std::size_t v = 0; v < 4; ++v) CHECK(std::abs(mean[v] - eb[v]) <= bound);
}

TEST_CASE("property: output does not depend on the worker count") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto g = testing::random_graph(30, 0.15, rng, [&](std::mt19937_64& r) { return unit(r); });
  const auto h1 = mc_harmonic(g, {2000, 9, 1});
  const auto b1 = mc_betweenness(g, {2000, 9, 1});
  for (std::size_t w : {2, 8}) {
    CHECK(mc_harmonic(g, {2000, 9, w}).scores == h1.scores);
    CHECK(mc_betweenness(g, {2000, 9, w}).scores == b1.scores);
  }
  CHECK(mc_harmonic(g, {2000, 10, 1}).scores != h1.scores);
}
