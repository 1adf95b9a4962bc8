// canned: decompose | select | evaluate | baseline
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "canned/export.hpp"
#include "canned/pipeline.hpp"
#include "canned/queries.hpp"
#include "canned/reduction.hpp"
#include "canned/truss.hpp"

namespace fs = std::filesystem;
using namespace canned;

namespace {

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", 100 * x);
  std::string s = buf;
  if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) s.resize(s.size() - 2);
  return s + "%";
}

std::string split_line(const DecompositionResult& r) {
  const double t = tir_fraction(r);
  return "TIR " + percent(t) + " TOR " + percent(1 - t);
}

void set_workers(int w) {
  if (w > 0) omp_set_num_threads(w);
}

struct Loaded {
  LoadedGraph graph;
  DecompositionResult result;
  double seconds = 0;
};

Loaded load_input(const RunConfig& cfg) {
  Loaded l;
  auto t0 = std::chrono::steady_clock::now();
  if (!cfg.decomposition.empty()) {
    auto d = load_trussness_dump(cfg.decomposition, cfg.plug.eta_max);
    l.graph = std::move(d.graph);
    l.result = std::move(d.result);
  } else {
    if (cfg.input.empty()) throw std::invalid_argument("--input or --decomposition is required");
    l.graph = load_edge_list(cfg.input);
    l.result = decompose(l.graph.graph, cfg.plug.eta_max);
  }
  l.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return l;
}

std::string default_name(const RunConfig& cfg) {
  if (!cfg.dataset_name.empty()) return cfg.dataset_name;
  const std::string& src = cfg.input.empty() ? cfg.decomposition : cfg.input;
  return fs::path(src).stem().string();
}

void add_plug_options(CLI::App* c, RunConfig& cfg, int& cap) {
  c->add_option("--input", cfg.input, "SNAP edge list");
  c->add_option("--eta-min", cfg.plug.eta_min, "smallest pattern size (edges)")->capture_default_str();
  c->add_option("--eta-max", cfg.plug.eta_max, "largest pattern size (edges)")->capture_default_str();
  c->add_option("--gamma", cfg.plug.gamma, "number of patterns to select")->capture_default_str();
  c->add_option("--per-size-cap", cap, "at most this many patterns of one size");
  c->add_option("--delta", cfg.delta, "minimum candidate frequency")->capture_default_str();
  c->add_option("--epsilon", cfg.epsilon, "minimum star degree")->capture_default_str();
  c->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  c->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")->capture_default_str();
  c->add_option("--out", cfg.out, "output directory")->capture_default_str();
  c->add_option("--name", cfg.dataset_name, "dataset name recorded in the export");
}

int run_pattern_command(RunConfig cfg, int cap, bool baseline) {
  if (cap > 0) cfg.plug.per_size_cap = cap;
  cfg.validate();
  set_workers(cfg.workers);
  cfg.dataset_name = default_name(cfg);
  Loaded l = load_input(cfg);
  PipelineResult res = baseline ? run_baseline(l.graph, l.result, cfg) : run_select(l.graph, l.result, cfg);
  res.times.gd = l.seconds;
  fs::create_directories(cfg.out);
  const std::string file = baseline ? "baseline.json" : "patterns.json";
  write_export((fs::path(cfg.out) / file).string(), res.exported);
  write_text((fs::path(cfg.out) / (baseline ? "baseline_summary.txt" : "summary.txt")).string(), summary_text(res));
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "selected " << res.exported.selected.size() << " patterns -> " << (fs::path(cfg.out) / file).string()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canned pattern selection for visual graph query interfaces"};
  app.set_config("--config", "", "TOML/INI config file; command-line flags take precedence");
  app.require_subcommand(1);

  RunConfig dcfg;
  auto* dec = app.add_subcommand("decompose", "truss decomposition and TIR/TOR split");
  dec->add_option("--input", dcfg.input, "SNAP edge list")->required();
  dec->add_option("--eta-max", dcfg.plug.eta_max, "trussness cap")->capture_default_str();
  dec->add_option("--workers", dcfg.workers, "worker threads (0 = all cores)")->capture_default_str();
  dec->add_option("--out", dcfg.out, "output directory")->capture_default_str();

  RunConfig scfg;
  int scap = 0;
  auto* sel = app.add_subcommand("select", "generate candidates and select canned patterns");
  add_plug_options(sel, scfg, scap);
  sel->add_option("--decomposition", scfg.decomposition, "trussness dump from 'decompose'");

  RunConfig bcfg;
  int bcap = 0;
  auto* base = app.add_subcommand("baseline", "random-pattern baseline through the same selector");
  add_plug_options(base, bcfg, bcap);
  base->add_option("--decomposition", bcfg.decomposition, "trussness dump from 'decompose'");
  base->add_option("--samples", bcfg.baseline_samples, "random subgraphs to sample")->capture_default_str();

  std::string export_path, queries_path, input_graph, out_dir = "out";
  std::uint64_t eval_seed = 1;
  int workers = 0;
  bool defaults_only = false;
  QueryMix mix;
  auto* ev = app.add_subcommand("evaluate", "reduction ratio of an export on a query workload");
  ev->add_option("--export", export_path, "pattern set export")->required();
  ev->add_option("--input", input_graph, "graph to sample queries from");
  ev->add_option("--queries", queries_path, "query or query-set file instead of sampling");
  ev->add_option("--seed", eval_seed, "query sampling seed")->capture_default_str();
  ev->add_option("--random-queries", mix.random, "random queries")->capture_default_str();
  ev->add_option("--shape-queries", "queries per shape (path, tree, star, cycle, flower)")
      ->each([&](const std::string& s) { mix.path = mix.tree = mix.star = mix.cycle = mix.flower = std::stoi(s); });
  ev->add_option("--min-size", mix.min_edges, "smallest query (edges)")->capture_default_str();
  ev->add_option("--max-size", mix.max_edges, "largest query (edges)")->capture_default_str();
  ev->add_flag("--defaults-only", defaults_only, "use only the default patterns");
  ev->add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();
  ev->add_option("--out", out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dec) {
      if (dcfg.plug.eta_max < 3) throw std::invalid_argument("eta_max must be >= 3");
      set_workers(dcfg.workers);
      LoadedGraph g = load_edge_list(dcfg.input);
      DecompositionResult r = decompose(g.graph, dcfg.plug.eta_max);
      fs::create_directories(dcfg.out);
      write_trussness_dump((fs::path(dcfg.out) / "trussness.txt").string(), r, &g.original_id);
      write_remap_table((fs::path(dcfg.out) / "remap.txt").string(), g);
      std::cout << split_line(r) << '\n';
      return 0;
    }
    if (*sel) return run_pattern_command(scfg, scap, false);
    if (*base) return run_pattern_command(bcfg, bcap, true);
    if (*ev) {
      set_workers(workers);
      PatternSetExport e = read_export(export_path);
      std::vector<Query> queries;
      if (!queries_path.empty()) {
        for (auto& q : read_queries(queries_path)) queries.push_back(std::move(q.query));
      } else {
        if (input_graph.empty()) throw std::invalid_argument("--input or --queries is required");
        LoadedGraph g = load_edge_list(input_graph);
        std::vector<std::string> warnings;
        if (mix.total() > 0) queries = generate_queries(g.graph, mix, eval_seed, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
      }
      MuReport rep = evaluate_queries(queries, export_patterns(e, !defaults_only));
      fs::create_directories(out_dir);
      write_mu_table((fs::path(out_dir) / "mu.tsv").string(), rep);
      write_mu_summary((fs::path(out_dir) / "mu_summary.txt").string(), rep);
      std::printf("queries %zu mean mu %.4f\n", rep.entries.size(), rep.mean);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
