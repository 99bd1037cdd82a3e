#include "ucent/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ucent/errors.hpp"
#include "ucent/evaluation.hpp"
#include "ucent/generators.hpp"
#include "ucent/graph_io.hpp"
#include "ucent/methods.hpp"
#include "ucent/monte_carlo.hpp"
#include "ucent/parallel.hpp"
#include "ucent/reproduce.hpp"
#include "ucent/scores_io.hpp"

namespace ucent {
namespace {

namespace fs = std::filesystem;

constexpr const char* kCsvHelp =
    "CSV columns: graph_id, model, prob_dist, measure, method, phi_or_samples, seed, mae, scc, "
    "runtime_ms_heuristic, runtime_ms_baseline. JSON: {mae, scc, method_a, method_b, "
    "runtime_a_ms, runtime_b_ms}.";

std::size_t default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    std::size_t w = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec == std::errc() && ptr == text.data() + text.size() && w >= 1) return w;
    throw InvalidInput(std::string(kWorkersEnv) + " must be a positive integer");
  }
  return hardware_workers();
}

// Writes through `write` into the file at `path`, or into `fallback` when the
// path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

struct GenerateOptions {
  std::size_t n = 100;
  double p = 0.05;
  std::size_t m = 5;
  double k = 6.0;
  double gamma = 3.0;
  std::string prob = "uniform";
  std::uint64_t seed = 0;
  std::string output;
};

struct CentralityOptions {
  std::string graph;
  double phi = kDefaultPhi;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::size_t cap = kDefaultEnumerationCap;
  bool runtime = false;
  std::string output;
};

struct CompareOptions {
  std::string a;
  std::string b;
  std::string format = "json";
  bool header = false;
  std::string graph_id;
  std::string model;
  std::string prob;
  bool omit_runtime = false;
  std::string output;
};

struct ReproduceOptions {
  std::string suite;
  std::string out_dir = "reproduce_out";
  std::size_t graphs = 10;
  std::size_t nodes = 100;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  bool omit_runtime = false;
};

void add_generate(CLI::App& app, GenerateOptions& opt, std::function<void(GraphModel)>& action) {
  auto* gen = app.add_subcommand("generate", "Generate a random uncertain graph (edge-list format)");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--prob", opt.prob, "Edge probabilities: uniform, beta or constant:<c>")
      ->capture_default_str();
  gen->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--output", opt.output, "Output file (default: stdout)");

  auto* er = gen->add_subcommand("er", "Erdos-Renyi ER(n,p)");
  er->add_option("--n", opt.n, "Nodes")->check(CLI::PositiveNumber)->capture_default_str();
  er->add_option("--p", opt.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  er->callback([&] { action(ErModel{opt.n, opt.p}); });

  auto* ba = gen->add_subcommand("ba", "Barabasi-Albert BA(n,m)");
  ba->add_option("--n", opt.n, "Nodes")->check(CLI::PositiveNumber)->capture_default_str();
  ba->add_option("--m", opt.m, "Edges per new node")->check(CLI::PositiveNumber)->capture_default_str();
  ba->callback([&] { action(BaModel{opt.n, opt.m}); });

  auto* rh = gen->add_subcommand("rh", "Random hyperbolic RH(n,k,gamma)");
  rh->add_option("--n", opt.n, "Nodes")->check(CLI::PositiveNumber)->capture_default_str();
  rh->add_option("--k", opt.k, "Target average degree")->capture_default_str();
  rh->add_option("--gamma", opt.gamma, "Power-law exponent (> 2)")->capture_default_str();
  rh->callback([&] { action(RhModel{opt.n, opt.k, opt.gamma}); });
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centrality estimation on uncertain graphs"};
  app.require_subcommand(1);
  app.footer(std::string("Default worker count comes from ") + kWorkersEnv +
             " or the number of hardware threads.");

  std::function<void()> run;

  GenerateOptions gen_opt;
  std::function<void(GraphModel)> gen_action = [&](GraphModel model) {
    run = [&, model] {
      validate(model);
      const ProbDist dist = parse_prob_dist(gen_opt.prob);
      const UncertainGraph g = generate({model, dist, gen_opt.seed});
      emit(gen_opt.output, out, [&](std::ostream& os) { write_graph(os, g); });
    };
  };
  add_generate(app, gen_opt, gen_action);

  CentralityOptions cen_opt;
  const char* methods[] = {"psp-harmonic",   "psp-betweenness",   "mc-harmonic",
                           "mc-betweenness", "exact-harmonic",    "exact-betweenness"};
  for (const char* name : methods) {
    const MethodSpec base = parse_method(name);
    auto* sub = app.add_subcommand(name, "Compute " + std::string(name) + " scores");
    sub->add_option("graph", cen_opt.graph, "Edge-list file")->required();
    sub->add_option("-w,--workers", cen_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cen_opt.output, "Scores file (default: stdout)");
    sub->add_flag("--runtime", cen_opt.runtime, "Record runtime_ms in the header");
    if (base.family == Family::psp) {
      sub->add_option("--phi", cen_opt.phi, "Connection-probability threshold")
          ->check(CLI::Range(0.0, 1.0))
          ->capture_default_str();
    }
    if (base.family == Family::mc) {
      const std::uint64_t fallback = base.measure == Measure::harmonic ? kDefaultHarmonicSamples
                                                                       : kDefaultBetweennessSamples;
      sub->add_option("--samples", cen_opt.samples,
                      "Sampled worlds (default " + std::to_string(fallback) + ")")
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", cen_opt.seed, "Master seed")->capture_default_str();
    }
    if (base.family == Family::exact) {
      sub->add_option("--cap", cen_opt.cap, "Maximum number of uncertain edges")
          ->capture_default_str();
    }
    sub->callback([&, base] {
      run = [&, base] {
        MethodSpec spec = base;
        spec.phi = cen_opt.phi;
        spec.seed = cen_opt.seed;
        spec.cap = cen_opt.cap;
        spec.workers = cen_opt.workers ? cen_opt.workers : default_workers();
        spec.samples = cen_opt.samples ? cen_opt.samples
                       : base.measure == Measure::harmonic ? kDefaultHarmonicSamples
                                                           : kDefaultBetweennessSamples;
        const UncertainGraph g = load_graph(cen_opt.graph);
        const CentralityVector c = compute(g, spec);
        emit(cen_opt.output, out, [&](std::ostream& os) { write_scores(os, c, cen_opt.runtime); });
      };
    });
  }

  CompareOptions cmp_opt;
  auto* cmp = app.add_subcommand("compare", "MAE and SCC between two scores files");
  cmp->footer(kCsvHelp);
  cmp->add_option("heuristic", cmp_opt.a, "Scores file of the heuristic")->required();
  cmp->add_option("baseline", cmp_opt.b, "Scores file of the baseline")->required();
  cmp->add_option("--format", cmp_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmp->add_flag("--header", cmp_opt.header, "Print the CSV header line first");
  cmp->add_option("--graph-id", cmp_opt.graph_id, "graph_id column");
  cmp->add_option("--model", cmp_opt.model, "model column");
  cmp->add_option("--prob", cmp_opt.prob, "prob_dist column");
  cmp->add_flag("--omit-runtime", cmp_opt.omit_runtime, "Leave the runtime columns empty");
  cmp->add_option("-o,--output", cmp_opt.output, "Output file (default: stdout)");
  cmp->callback([&] {
    run = [&] {
      const auto a = load_scores(cmp_opt.a);
      const auto b = load_scores(cmp_opt.b);
      if (a.size() != b.size()) {
        throw InvalidInput("node count mismatch: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
      }
      const ExperimentReport report = compare(a, b);
      emit(cmp_opt.output, out, [&](std::ostream& os) {
        if (cmp_opt.format == "json") {
          os << to_json(report).dump(2) << '\n';
          return;
        }
        if (cmp_opt.header) os << kCsvHeader << '\n';
        write_csv_row(os, csv_row(report, cmp_opt.graph_id, cmp_opt.model, cmp_opt.prob),
                      !cmp_opt.omit_runtime);
      });
    };
  });

  ReproduceOptions rep_opt;
  auto* rep = app.add_subcommand("reproduce", "Re-run the worked examples or the phi sweep");
  rep->footer(kCsvHelp);
  rep->add_option("suite", rep_opt.suite, "figure-examples or random-graph-sweep")
      ->required()
      ->check(CLI::IsMember({"figure-examples", "random-graph-sweep"}));
  rep->add_option("--out", rep_opt.out_dir, "Output directory")->capture_default_str();
  rep->add_option("--graphs", rep_opt.graphs, "Graphs per (model, distribution) cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep->add_option("--nodes", rep_opt.nodes, "Nodes per graph")
      ->check(CLI::Range(std::size_t{6}, std::size_t{1} << 20))
      ->capture_default_str();
  rep->add_option("--samples", rep_opt.samples, "Monte Carlo samples per graph")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep->add_option("--seed", rep_opt.seed, "Master seed")->capture_default_str();
  rep->add_option("-w,--workers", rep_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  rep->add_flag("--omit-runtime", rep_opt.omit_runtime,
                "Leave runtime columns empty so reruns are byte-identical");
  rep->callback([&] {
    run = [&] {
      fs::create_directories(rep_opt.out_dir);
      const fs::path dir(rep_opt.out_dir);
      if (rep_opt.suite == "figure-examples") {
        emit((dir / "figure_examples.json").string(), out, write_figure_examples);
        write_figure_examples(out);
        return;
      }
      SweepConfig cfg;
      cfg.nodes = rep_opt.nodes;
      cfg.graphs = rep_opt.graphs;
      cfg.samples = rep_opt.samples;
      cfg.master_seed = rep_opt.seed;
      cfg.workers = rep_opt.workers ? rep_opt.workers : default_workers();
      const auto records = run_sweep(cfg);
      const bool runtime = !rep_opt.omit_runtime;
      for (Measure m : cfg.measures) {
        const std::string name(to_string(m));
        emit((dir / ("sweep_" + name + ".csv")).string(), out,
             [&](std::ostream& os) { write_sweep_csv(os, records, m, runtime); });
        emit((dir / ("sweep_" + name + "_summary.csv")).string(), out,
             [&](std::ostream& os) { write_sweep_summary_csv(os, records, m, runtime); });
        out << "wrote " << (dir / ("sweep_" + name + ".csv")).string() << " and "
            << (dir / ("sweep_" + name + "_summary.csv")).string() << '\n';
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg) if (c == '\n') c = ' ';
    err << "ucent: usage error: " << msg << '\n';
    return 2;
  }

  try {
    if (run) run();
    return 0;
  } catch (const InvalidInput& e) {
    err << "ucent: usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "ucent: error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace ucent
