#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canned/queries.hpp"
#include "canned/reduction.hpp"
#include "canned/selection.hpp"

namespace canned {

inline constexpr int kExportVersion = 1;
inline constexpr int kQueryVersion = 1;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetStats {
  std::string name;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double tir_fraction = 0;
  double tor_fraction = 0;
};

struct ExportedPattern {
  std::string id;
  std::string cls;   // class_name()
  std::string kind;  // CCP kind, empty otherwise
  std::vector<int> params;
  SmallGraph graph;
  // Selected patterns only.
  std::uint64_t freq = 0;
  double cov_ub_norm = 0;
  double cog = 0;
  int rank = 0;
};

struct PatternSetExport {
  std::string source = "select";  // "select" or "baseline"
  DatasetStats dataset;
  Plug plug;
  std::uint64_t delta = 3;
  int epsilon = 5;
  std::uint64_t seed = 0;
  std::vector<ExportedPattern> defaults;
  std::vector<ExportedPattern> selected;
  std::vector<SetScore> score_trace;
};

PatternSetExport make_export(const PatternSet& set, const DatasetStats& stats, const Plug& plug,
                             std::uint64_t delta, int epsilon, const std::string& source);

std::string export_to_json(const PatternSetExport& e);
// Strict: unknown fields, wrong types, bad versions and bad edges throw SchemaError.
PatternSetExport export_from_json(const std::string& text);
void write_export(const std::string& path, const PatternSetExport& e);
PatternSetExport read_export(const std::string& path);

// Patterns usable for step planning: defaults always, selected when asked.
std::vector<NamedPattern> export_patterns(const PatternSetExport& e, bool include_selected = true);

struct QuerySession {
  std::size_t steps = 0;
  std::size_t label_steps = 0;  // kept apart from steps, not part of mu
  std::optional<double> elapsed_ms;
};

struct QueryFile {
  Query query;
  std::vector<std::uint32_t> labels;
  std::optional<QuerySession> session;
  bool allow_disconnected = false;
};

std::string query_to_json(const QueryFile& q);
QueryFile query_from_json(const std::string& text);
std::string query_set_to_json(const std::vector<QueryFile>& qs);
// Accepts a single query document or a query set.
std::vector<QueryFile> queries_from_json(const std::string& text);
std::vector<QueryFile> read_queries(const std::string& path);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace canned
