#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "canned/export.hpp"
#include "canned/fixtures.hpp"
#include "canned/graph.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CANNED_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("canned_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

void put(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string slurp(const std::string& path) { return canned::read_text(path); }

// Small collaboration-style graph written as an edge list.
std::string write_fixture(const TempDir& d) {
  const std::string path = d / "graph.txt";
  auto g = canned::collab_fixture(4, 500, 200);
  std::string text = "# fixture\n";
  for (canned::EdgeIndex e = 0; e < g.edge_count(); ++e)
    text += std::to_string(g.edge(e).u) + "\t" + std::to_string(g.edge(e).v) + "\n";
  put(path, text);
  return path;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("decompose").code == 1);
}

TEST_CASE("missing input is a runtime error") {
  TempDir d;
  auto r = run("decompose --input " + (d / "nope.txt") + " --out " + (d / "o"));
  CHECK(r.code == 2);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("invalid plug is a configuration error") {
  TempDir d;
  const auto g = write_fixture(d);
  CHECK(run("select --input " + g + " --gamma 0 --out " + (d / "o")).code == 1);
  CHECK(run("select --input " + g + " --eta-min 2 --out " + (d / "o")).code == 1);
  CHECK(run("select --input " + g + " --eta-min 9 --eta-max 5 --out " + (d / "o")).code == 1);
}

TEST_CASE("triangle with a self-loop") {
  TempDir d;
  put(d / "tri.txt", "# triangle\n1 2\n2 3\n3 1\n2 2\n");
  auto r = run("decompose --input " + (d / "tri.txt") + " --out " + (d / "o"));
  CHECK(r.code == 0);
  CHECK(r.out.find("TIR 100% TOR 0%") != std::string::npos);
  CHECK(fs::exists(d / "o/trussness.txt"));
  CHECK(fs::exists(d / "o/remap.txt"));
}

TEST_CASE("same seed gives byte-identical exports") {
  TempDir d;
  const auto g = write_fixture(d);
  const std::string base = "select --input " + g + " --seed 9 --name fx";
  REQUIRE(run(base + " --workers 1 --out " + (d / "a")).code == 0);
  REQUIRE(run(base + " --workers 1 --out " + (d / "b")).code == 0);
  REQUIRE(run(base + " --workers 4 --out " + (d / "c")).code == 0);
  const auto a = slurp(d / "a/patterns.json");
  CHECK(!a.empty());
  CHECK(a == slurp(d / "b/patterns.json"));
  CHECK(a == slurp(d / "c/patterns.json"));
  auto e = canned::export_from_json(a);
  CHECK(e.seed == 9);
  CHECK(e.dataset.name == "fx");
}

TEST_CASE("phased run equals the end-to-end run") {
  TempDir d;
  const auto g = write_fixture(d);
  REQUIRE(run("decompose --input " + g + " --out " + (d / "dec")).code == 0);
  REQUIRE(run("select --decomposition " + (d / "dec/trussness.txt") + " --name fx --out " + (d / "p")).code == 0);
  REQUIRE(run("select --input " + g + " --name fx --out " + (d / "e")).code == 0);
  CHECK(slurp(d / "p/patterns.json") == slurp(d / "e/patterns.json"));
}

TEST_CASE("baseline and evaluate") {
  TempDir d;
  const auto g = write_fixture(d);
  REQUIRE(run("baseline --input " + g + " --samples 60 --out " + (d / "o")).code == 0);
  auto b = canned::read_export(d / "o/baseline.json");
  CHECK(b.source == "baseline");

  REQUIRE(run("select --input " + g + " --out " + (d / "o")).code == 0);
  auto r = run("evaluate --export " + (d / "o/patterns.json") + " --input " + g +
               " --random-queries 20 --shape-queries 4 --out " + (d / "ev"));
  CHECK(r.code == 0);
  CHECK(r.out.find("queries 40") != std::string::npos);
  CHECK(fs::exists(d / "ev/mu.tsv"));
  CHECK(fs::exists(d / "ev/mu_summary.txt"));
}

TEST_CASE("evaluate on an empty query set") {
  TempDir d;
  const auto g = write_fixture(d);
  REQUIRE(run("select --input " + g + " --out " + (d / "o")).code == 0);
  put(d / "empty.json", canned::query_set_to_json({}));
  auto r = run("evaluate --export " + (d / "o/patterns.json") + " --queries " + (d / "empty.json") +
               " --out " + (d / "ev"));
  CHECK(r.code == 0);
  CHECK(r.out.find("queries 0") != std::string::npos);
}

TEST_CASE("evaluate rejects a malformed export") {
  TempDir d;
  put(d / "bad.json", "{\"version\": 99}");
  put(d / "empty.json", canned::query_set_to_json({}));
  auto r = run("evaluate --export " + (d / "bad.json") + " --queries " + (d / "empty.json"));
  CHECK(r.code == 2);
}

TEST_CASE("config file sets defaults and flags override it") {
  TempDir d;
  const auto g = write_fixture(d);
  put(d / "run.ini", "[select]\nseed = 17\ngamma = 2\n");
  REQUIRE(run("--config " + (d / "run.ini") + " select --input " + g + " --out " + (d / "a")).code == 0);
  auto a = canned::read_export(d / "a/patterns.json");
  CHECK(a.seed == 17);
  CHECK(a.plug.gamma == 2);
  REQUIRE(run("--config " + (d / "run.ini") + " select --input " + g + " --seed 3 --out " + (d / "b")).code == 0);
  auto b = canned::read_export(d / "b/patterns.json");
  CHECK(b.seed == 3);
  CHECK(b.plug.gamma == 2);
}
