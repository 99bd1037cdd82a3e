#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support.hpp"
#include "ucent/errors.hpp"
#include "ucent/evaluation.hpp"
#include "ucent/methods.hpp"
#include "ucent/scores_io.hpp"

using namespace ucent;

namespace {

using V = std::vector<double>;

// Spearman coefficient from the definition: Pearson correlation of average
// ranks, ranks computed by counting.
double spearman_oracle(const V& a, const V& b) {
  auto rank = [](const V& x) {
    V r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      double less = 0, equal = 0;
      for (double y : x) {
        less += y < x[i];
        equal += y == x[i];
      }
      r[i] = less + (equal + 1) / 2.0;
    }
    return r;
  };
  const V ra = rank(a), rb = rank(b);
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += ra[i] / n;
    mb += rb[i] / n;
  }
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

} // namespace

TEST_CASE("MAE examples") {
  CHECK(mae(V{0.3, 0.1}, V{0.3, 0.1}) == 0.0);
  CHECK(mae(V{0, 1}, V{1, 0}) == 1.0);
  CHECK(std::abs(mae(V{0.2, 0.4, 0.9}, V{0.1, 0.5, 0.6}) - 0.5 / 3) <= 1e-12);
  CHECK_THROWS_AS(mae(V{1}, V{1, 2}), InvalidInput);
  CHECK_THROWS_AS(mae(V{}, V{}), InvalidInput);
}

TEST_CASE("SCC examples") {
  CHECK(scc(V{1, 2, 3, 4}, V{1, 2, 3, 4}) == 1.0);
  CHECK(scc(V{1, 2, 3, 4, 5}, V{9, 7, 5, 3, 1}) == -1.0);
  CHECK(std::abs(scc(V{1, 2, 3, 4}, V{1, 2, 4, 3}) - 0.8) <= 1e-12);
  CHECK_THROWS_AS(scc(V{1}, V{1}), InvalidInput);
  CHECK_THROWS_AS(scc(V{1, 2}, V{1, 2, 3}), InvalidInput);
}

TEST_CASE("average ranks") {
  CHECK(average_ranks(V{10, 20, 20, 5}) == V{2, 3.5, 3.5, 1});
  CHECK(average_ranks(V{0, 0, 0}) == V{2, 2, 2});
}

TEST_CASE("SCC with ties matches the rank correlation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    V a(12), b(12);
    for (auto& x : a) x = small(rng);
    for (auto& x : b) x = small(rng);
    if (std::all_of(a.begin(), a.end(), [&](double x) { return x == a[0]; })) continue;
    if (std::all_of(b.begin(), b.end(), [&](double x) { return x == b[0]; })) continue;
    const double s = scc(a, b);
    CHECK(std::abs(s - spearman_oracle(a, b)) <= 1e-12);
    CHECK(s >= -1.0);
    CHECK(s <= 1.0);
  }
  // A constant ranking has no correlation structure; the closed formula is used.
  const double flat = scc(V{0, 0, 0, 0}, V{1, 2, 3, 4});
  CHECK(std::abs(flat - (1.0 - 6.0 * 5.0 / 60.0)) <= 1e-12);
}

TEST_CASE("property: SCC is invariant under increasing transforms") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    V a(20), b(20);
    for (auto& x : a) x = unit(rng);
    for (auto& x : b) x = unit(rng);
    V ta = a, tb = b;
    for (auto& x : ta) x = std::exp(3 * x) - 7;
    for (auto& x : tb) x = x * x * x + 2 * x;
    CHECK(scc(a, b) == scc(ta, tb));
    CHECK(scc(a, b) == scc(b, a));
  }
}

TEST_CASE("property: MAE is symmetric and obeys the triangle inequality") {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    V a(15), b(15), c(15);
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = unit(rng);
    CHECK(mae(a, b) == mae(b, a));
    CHECK(mae(a, c) <= mae(a, b) + mae(b, c) + 1e-15);
    CHECK(mae(a, b) >= 0.0);
  }
}

TEST_CASE("experiments") {
  const auto g = testing::star(6);
  MethodSpec det = parse_method("deterministic-betweenness");
  MethodSpec psp = parse_method("psp-betweenness");
  const auto same = run_experiment(g, psp, det);
  CHECK(same.mae == 0.0);
  CHECK(same.scc == 1.0);
  CHECK(same.method_a.method == "psp-betweenness");
  CHECK(same.method_b.method == "deterministic-betweenness");

  const auto fig4 =
      testing::make_graph(4, {{0, 1, 1}, {0, 2, 0.5}, {1, 2, 0.5}, {2, 3, 0.7}, {1, 3, 0.6}});
  const auto r = run_experiment(fig4, parse_method("psp-harmonic"), parse_method("exact-harmonic"));
  CHECK(std::isfinite(r.mae));
  CHECK(r.mae > 0.0);
  CHECK(r.runtime_a_ms >= 0.0);
  CHECK(r.method_a.phi == 0.8);
  const auto j = to_json(r);
  CHECK(j.contains("mae"));
  CHECK(j["method_a"]["method"] == "psp-harmonic");
  CHECK(j["method_b"]["method"] == "exact-harmonic");

  std::vector<ExperimentReport> batch;
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MethodSpec mc = parse_method("mc-harmonic");
    mc.samples = 200;
    mc.seed = seed;
    batch.push_back(run_experiment(fig4, parse_method("psp-harmonic"), mc));
    total += batch.back().mae;
  }
  const auto summary = aggregate(batch);
  CHECK(summary.count == 20);
  CHECK(std::abs(summary.mean_mae - total / 20) <= 1e-15);

  CHECK_THROWS_AS(parse_method("psp"), InvalidInput);
  CHECK_THROWS_AS(parse_method("foo-harmonic"), InvalidInput);
  CHECK_THROWS_AS(parse_method("psp-closeness"), InvalidInput);
}

TEST_CASE("CSV rows") {
  ExperimentReport r;
  r.mae = 0.25;
  r.scc = 0.5;
  r.method_a.method = "psp-betweenness";
  r.method_a.phi = 0.8;
  r.method_b.method = "mc-betweenness";
  r.method_b.samples = 10000;
  r.method_b.seed = 7;
  r.runtime_a_ms = 1.5;
  r.runtime_b_ms = 20;
  std::ostringstream out;
  write_csv_row(out, csv_row(r, "g0", "ER(100,0.05)", "uniform"));
  CHECK(out.str() == "g0,\"ER(100,0.05)\",uniform,betweenness,psp-betweenness,0.8,7,0.25,0.5,1.5,20\n");
  std::ostringstream quiet;
  write_csv_row(quiet, csv_row(r, "g0", "m", "d"), false);
  CHECK(quiet.str() == "g0,m,d,betweenness,psp-betweenness,0.8,7,0.25,0.5,,\n");
}

TEST_CASE("scores files") {
  CentralityVector c;
  c.scores = {0.1, 1.0 / 3.0, 0.0};
  c.provenance.method = "mc-harmonic";
  c.provenance.samples = 100;
  c.provenance.seed = 5;
  c.provenance.runtime_ms = 12.5;
  std::stringstream buf;
  write_scores(buf, c, true);
  CHECK(buf.str().rfind("# method mc-harmonic\n# samples 100\n# seed 5\n# runtime_ms 12.5\n", 0) == 0);
  const auto back = read_scores(buf);
  CHECK(back.scores == c.scores);
  CHECK(back.provenance.method == "mc-harmonic");
  CHECK(back.provenance.samples == 100);
  CHECK(back.provenance.seed == 5);

  std::stringstream no_runtime;
  write_scores(no_runtime, c);
  CHECK(no_runtime.str().find("runtime") == std::string::npos);

  std::istringstream bad("0 0.5\n2 0.1\n");
  CHECK_THROWS_AS(read_scores(bad), ParseError);
  std::istringstream junk("0 abc\n");
  CHECK_THROWS_AS(read_scores(junk), ParseError);
}
