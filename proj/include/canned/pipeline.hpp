#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canned/export.hpp"
#include "canned/graph.hpp"
#include "canned/selection.hpp"
#include "canned/truss.hpp"

namespace canned {

struct RunConfig {
  std::string input;
  std::string decomposition;  // optional trussness dump to start from
  std::string dataset_name;   // defaults to the input file stem
  Plug plug;
  std::uint64_t delta = 3;
  int epsilon = 5;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = all cores
  std::string out = "out";
  std::size_t baseline_samples = 300;

  void validate() const;
};

struct PhaseTimes {
  double gd = 0;  // graph decomposition
  double cg = 0;  // candidate generation
  double ps = 0;  // pruning + scoring + selection
};

struct CandidatePool {
  std::vector<Pattern> patterns;
  RegionSizes regions;
};

// All TIR and TOR candidates, before pruning.
CandidatePool generate_candidates(const DecompositionResult& r, int epsilon, int eta_min, int eta_max);
// Uniform-size random connected subgraphs, merged by isomorphism.
CandidatePool random_candidates(const Graph& g, const Plug& plug, std::size_t samples, std::uint64_t seed);

struct PipelineResult {
  PatternSetExport exported;
  PhaseTimes times;
  std::size_t candidates = 0;
  std::size_t after_prune = 0;
  std::vector<std::string> warnings;
};

DatasetStats dataset_stats(const std::string& name, const LoadedGraph& g, const DecompositionResult& r);
PipelineResult run_select(const LoadedGraph& g, const DecompositionResult& r, const RunConfig& cfg);
PipelineResult run_baseline(const LoadedGraph& g, const DecompositionResult& r, const RunConfig& cfg);

// Human-readable run summary; the only place wall times are written.
std::string summary_text(const PipelineResult& res);

}  // namespace canned
