#include "canned/export.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace canned {

using json = nlohmann::ordered_json;

namespace {

const char* kExportSchema = "canned-pattern-set";
const char* kQuerySchema = "query";
const char* kQuerySetSchema = "query-set";

// Field reader that remembers which keys were consumed so leftovers can be rejected.
class Fields {
 public:
  Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) fail("expected an object");
  }

  const json& req(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing field '" + key + "'");
    used_.insert(key);
    return *it;
  }
  const json* opt(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    if (it->is_null()) return nullptr;
    return &*it;
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) fail("unknown field '" + it.key() + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(where_ + ": " + msg); }
  const std::string& where() const { return where_; }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> used_;
};

std::uint64_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw SchemaError(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return v.get<int>();
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw SchemaError(where + ": expected a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + ": expected a string");
  return v.get<std::string>();
}

void check_header(Fields& f, const char* schema, int version) {
  if (as_string(f.req("schema"), f.where() + ".schema") != schema)
    f.fail(std::string("schema must be '") + schema + "'");
  if (as_int(f.req("version"), f.where() + ".version") != version)
    f.fail("unsupported version (expected " + std::to_string(version) + ")");
}

json graph_to_json_vertices(const SmallGraph& g) {
  json v = json::array();
  for (VertexId i = 0; i < g.vertex_count(); ++i) v.push_back(i);
  return v;
}

json graph_to_json_edges(const SmallGraph& g) {
  json e = json::array();
  for (const auto& x : g.edges()) e.push_back(json::array({x.u, x.v}));
  return e;
}

// Vertices must be 0..n-1 in order; edges must be distinct in-range pairs without loops.
SmallGraph graph_from_json(const json& vs, const json& es, const std::string& where) {
  if (!vs.is_array()) throw SchemaError(where + ".vertices: expected an array");
  if (!es.is_array()) throw SchemaError(where + ".edges: expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (as_count(vs[i], where + ".vertices") != i)
      throw SchemaError(where + ".vertices: expected ids 0..n-1 in order");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<EdgeId> seen;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw SchemaError(where + ".edges: expected [u, v] pairs");
    const auto u = as_count(e[0], where + ".edges"), v = as_count(e[1], where + ".edges");
    if (u >= vs.size() || v >= vs.size()) throw SchemaError(where + ".edges: vertex out of range");
    if (u == v) throw SchemaError(where + ".edges: self-loop");
    if (!seen.insert(EdgeId(u, v)).second) throw SchemaError(where + ".edges: duplicate edge");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph::from_edges(vs.size(), std::move(edges));
}

ExportedPattern exported(const Pattern& p) {
  ExportedPattern e;
  e.id = p.id;
  e.cls = class_name(p.cls);
  if (p.cls == PatternClass::Composite) e.kind = kind_name(p.kind);
  e.params = p.params;
  e.graph = p.graph;
  return e;
}

json pattern_to_json(const ExportedPattern& p, bool selected) {
  json j;
  j["id"] = p.id;
  j["class"] = p.cls;
  json d;
  if (!p.kind.empty()) d["kind"] = p.kind;
  d["params"] = p.params;
  j["descriptor"] = d;
  j["vertices"] = graph_to_json_vertices(p.graph);
  j["edges"] = graph_to_json_edges(p.graph);
  if (selected) {
    j["freq"] = p.freq;
    j["cov_ub_norm"] = p.cov_ub_norm;
    j["cog"] = p.cog;
    j["rank"] = p.rank;
  }
  return j;
}

const std::set<std::string>& known_classes() {
  static const std::set<std::string> s{"default", "kcp",  "ccp",    "star",  "asterism",
                                       "path",    "cycle", "unique", "random"};
  return s;
}

ExportedPattern pattern_from_json(const json& j, const std::string& where, bool selected) {
  Fields f(j, where);
  ExportedPattern p;
  p.id = as_string(f.req("id"), where + ".id");
  p.cls = as_string(f.req("class"), where + ".class");
  if (!known_classes().count(p.cls)) f.fail("unknown class '" + p.cls + "'");
  {
    Fields d(f.req("descriptor"), where + ".descriptor");
    if (const json* k = d.opt("kind")) {
      p.kind = as_string(*k, where + ".descriptor.kind");
      if (p.kind != "tn" && p.kind != "nn" && p.kind != "no") d.fail("unknown kind '" + p.kind + "'");
    }
    const json& ps = d.req("params");
    if (!ps.is_array()) d.fail("params must be an array");
    for (const auto& x : ps) p.params.push_back(as_int(x, where + ".descriptor.params"));
    d.finish();
  }
  if ((p.cls == "ccp") != !p.kind.empty()) f.fail("descriptor.kind is required for ccp and only for ccp");
  p.graph = graph_from_json(f.req("vertices"), f.req("edges"), where);
  if (selected) {
    p.freq = as_count(f.req("freq"), where + ".freq");
    p.cov_ub_norm = as_number(f.req("cov_ub_norm"), where + ".cov_ub_norm");
    p.cog = as_number(f.req("cog"), where + ".cog");
    p.rank = as_int(f.req("rank"), where + ".rank");
    if (p.cov_ub_norm < 0 || p.cov_ub_norm > 1) f.fail("cov_ub_norm outside [0,1]");
    if (p.cog <= 0 || p.cog >= 1) f.fail("cog outside (0,1)");
    if (p.rank < 1) f.fail("rank must be >= 1");
  }
  f.finish();
  return p;
}

json query_body(const QueryFile& q) {
  json j;
  j["id"] = q.query.id;
  j["tag"] = tag_name(q.query.tag);
  j["vertices"] = graph_to_json_vertices(q.query.graph);
  j["edges"] = graph_to_json_edges(q.query.graph);
  if (!q.labels.empty()) j["labels"] = q.labels;
  if (q.allow_disconnected) j["allow_disconnected"] = true;
  if (q.session) {
    json s;
    s["steps"] = q.session->steps;
    s["label_steps"] = q.session->label_steps;
    if (q.session->elapsed_ms) s["elapsed_ms"] = *q.session->elapsed_ms;
    j["session"] = s;
  }
  return j;
}

QueryFile query_fields(Fields& f, const std::string& where) {
  QueryFile q;
  q.query.id = as_string(f.req("id"), where + ".id");
  if (const json* t = f.opt("tag")) {
    try {
      q.query.tag = parse_tag(as_string(*t, where + ".tag"));
    } catch (const std::invalid_argument& e) {
      f.fail(e.what());
    }
  }
  q.query.graph = graph_from_json(f.req("vertices"), f.req("edges"), where);
  if (const json* l = f.opt("labels")) {
    if (!l->is_array() || l->size() != q.query.graph.vertex_count())
      f.fail("labels must be an array with one entry per vertex");
    for (const auto& x : *l) q.labels.push_back(static_cast<std::uint32_t>(as_count(x, where + ".labels")));
  }
  if (const json* a = f.opt("allow_disconnected")) {
    if (!a->is_boolean()) f.fail("allow_disconnected must be a boolean");
    q.allow_disconnected = a->get<bool>();
  }
  if (const json* s = f.opt("session")) {
    Fields sf(*s, where + ".session");
    QuerySession qs;
    qs.steps = as_count(sf.req("steps"), where + ".session.steps");
    qs.label_steps = as_count(sf.req("label_steps"), where + ".session.label_steps");
    if (const json* e = sf.opt("elapsed_ms")) qs.elapsed_ms = as_number(*e, where + ".session.elapsed_ms");
    sf.finish();
    q.session = qs;
  }
  if (q.query.graph.edge_count() == 0) f.fail("query has no edges");
  if (!q.allow_disconnected && !q.query.graph.is_connected()) f.fail("query is disconnected");
  return q;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

PatternSetExport make_export(const PatternSet& set, const DatasetStats& stats, const Plug& plug,
                             std::uint64_t delta, int epsilon, const std::string& source) {
  PatternSetExport e;
  e.source = source;
  e.dataset = stats;
  e.plug = plug;
  e.delta = delta;
  e.epsilon = epsilon;
  e.seed = set.seed;
  for (const auto& d : set.defaults) e.defaults.push_back(exported(d));
  for (const auto& s : set.selected) {
    ExportedPattern p = exported(s.cand.pattern);
    p.freq = s.cand.pattern.freq;
    p.cov_ub_norm = s.cand.cov_ub_norm;
    p.cog = s.cand.cog;
    p.rank = s.rank;
    e.selected.push_back(std::move(p));
  }
  e.score_trace = set.score_trace;
  return e;
}

std::string export_to_json(const PatternSetExport& e) {
  json j;
  j["schema"] = kExportSchema;
  j["version"] = kExportVersion;
  j["source"] = e.source;
  j["dataset"] = {{"name", e.dataset.name},
                  {"vertices", e.dataset.vertices},
                  {"edges", e.dataset.edges},
                  {"tir_fraction", e.dataset.tir_fraction},
                  {"tor_fraction", e.dataset.tor_fraction}};
  json plug = {{"eta_min", e.plug.eta_min}, {"eta_max", e.plug.eta_max}, {"gamma", e.plug.gamma}};
  plug["per_size_cap"] = e.plug.per_size_cap ? json(*e.plug.per_size_cap) : json(nullptr);
  j["plug"] = plug;
  j["delta"] = e.delta;
  j["epsilon"] = e.epsilon;
  j["seed"] = e.seed;
  j["defaults"] = json::array();
  for (const auto& p : e.defaults) j["defaults"].push_back(pattern_to_json(p, false));
  j["selected"] = json::array();
  for (const auto& p : e.selected) j["selected"].push_back(pattern_to_json(p, true));
  j["score_trace"] = json::array();
  for (const auto& s : e.score_trace)
    j["score_trace"].push_back({{"size", s.size}, {"f_cov", s.f_cov}, {"f_sim", s.f_sim}, {"f_cog", s.f_cog}, {"s", s.s}});
  return j.dump(2) + "\n";
}

PatternSetExport export_from_json(const std::string& text) {
  const json j = parse(text);
  Fields f(j, "export");
  check_header(f, kExportSchema, kExportVersion);
  PatternSetExport e;
  e.source = as_string(f.req("source"), "export.source");
  if (e.source != "select" && e.source != "baseline") f.fail("source must be 'select' or 'baseline'");
  {
    Fields d(f.req("dataset"), "export.dataset");
    e.dataset.name = as_string(d.req("name"), "export.dataset.name");
    e.dataset.vertices = as_count(d.req("vertices"), "export.dataset.vertices");
    e.dataset.edges = as_count(d.req("edges"), "export.dataset.edges");
    e.dataset.tir_fraction = as_number(d.req("tir_fraction"), "export.dataset.tir_fraction");
    e.dataset.tor_fraction = as_number(d.req("tor_fraction"), "export.dataset.tor_fraction");
    d.finish();
  }
  {
    Fields p(f.req("plug"), "export.plug");
    e.plug.eta_min = as_int(p.req("eta_min"), "export.plug.eta_min");
    e.plug.eta_max = as_int(p.req("eta_max"), "export.plug.eta_max");
    e.plug.gamma = as_int(p.req("gamma"), "export.plug.gamma");
    if (const json* c = p.opt("per_size_cap")) e.plug.per_size_cap = as_int(*c, "export.plug.per_size_cap");
    p.finish();
    try {
      e.plug.validate();
    } catch (const std::invalid_argument& ex) {
      p.fail(ex.what());
    }
  }
  e.delta = as_count(f.req("delta"), "export.delta");
  e.epsilon = as_int(f.req("epsilon"), "export.epsilon");
  e.seed = as_count(f.req("seed"), "export.seed");
  auto list = [&](const char* key, bool selected) {
    const json& a = f.req(key);
    if (!a.is_array()) f.fail(std::string(key) + " must be an array");
    std::vector<ExportedPattern> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(pattern_from_json(a[i], "export." + std::string(key) + "[" + std::to_string(i) + "]", selected));
    return out;
  };
  e.defaults = list("defaults", false);
  e.selected = list("selected", true);
  if (e.selected.size() > static_cast<std::size_t>(e.plug.gamma)) f.fail("more selected patterns than gamma");
  const json& tr = f.req("score_trace");
  if (!tr.is_array()) f.fail("score_trace must be an array");
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const std::string w = "export.score_trace[" + std::to_string(i) + "]";
    Fields s(tr[i], w);
    SetScore sc;
    sc.size = as_count(s.req("size"), w + ".size");
    sc.f_cov = as_number(s.req("f_cov"), w + ".f_cov");
    sc.f_sim = as_number(s.req("f_sim"), w + ".f_sim");
    sc.f_cog = as_number(s.req("f_cog"), w + ".f_cog");
    sc.s = as_number(s.req("s"), w + ".s");
    s.finish();
    e.score_trace.push_back(sc);
  }
  f.finish();
  return e;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_export(const std::string& path, const PatternSetExport& e) { write_text(path, export_to_json(e)); }

PatternSetExport read_export(const std::string& path) { return export_from_json(read_text(path)); }

std::vector<NamedPattern> export_patterns(const PatternSetExport& e, bool include_selected) {
  std::vector<NamedPattern> out;
  for (const auto& p : e.defaults) out.push_back({p.id, p.graph, true});
  if (include_selected)
    for (const auto& p : e.selected) out.push_back({p.id, p.graph, false});
  return out;
}

std::string query_to_json(const QueryFile& q) {
  json j;
  j["schema"] = kQuerySchema;
  j["version"] = kQueryVersion;
  const json body = query_body(q);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j.dump(2) + "\n";
}

QueryFile query_from_json(const std::string& text) {
  const json j = parse(text);
  Fields f(j, "query");
  check_header(f, kQuerySchema, kQueryVersion);
  QueryFile q = query_fields(f, "query");
  f.finish();
  return q;
}

std::string query_set_to_json(const std::vector<QueryFile>& qs) {
  json j;
  j["schema"] = kQuerySetSchema;
  j["version"] = kQueryVersion;
  j["queries"] = json::array();
  for (const auto& q : qs) j["queries"].push_back(query_body(q));
  return j.dump(2) + "\n";
}

std::vector<QueryFile> queries_from_json(const std::string& text) {
  const json j = parse(text);
  if (j.is_object() && j.value("schema", "") == kQuerySchema) return {query_from_json(text)};
  Fields f(j, "query-set");
  check_header(f, kQuerySetSchema, kQueryVersion);
  const json& a = f.req("queries");
  if (!a.is_array()) f.fail("queries must be an array");
  std::vector<QueryFile> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Fields qf(a[i], "query-set.queries[" + std::to_string(i) + "]");
    out.push_back(query_fields(qf, qf.where()));
    qf.finish();
  }
  f.finish();
  return out;
}

std::vector<QueryFile> read_queries(const std::string& path) { return queries_from_json(read_text(path)); }

}  // namespace canned
