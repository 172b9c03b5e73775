#include "doctest.h"

#include "bnkit/cli/bench.hpp"
#include "bnkit/cli/commands.hpp"
#include "bnkit/cli/generator.hpp"
#include "bnkit/closure.hpp"
#include "bnkit/error.hpp"
#include "bnkit/graph_io.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bnkit;
using namespace bnkit::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(line);
  return out;
}

std::set<std::string> line_set(const std::string &text) {
  const auto v = lines(text);
  return {v.begin(), v.end()};
}

class TempDir {
public:
  explicit TempDir(const std::string &tag) {
    path_ = fs::temp_directory_path() /
            ("bnkit-" + tag + "-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string &name, const std::string &content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path() const { return path_.string(); }

private:
  fs::path path_;
};

using Set = std::set<std::string>;

} // namespace

TEST_CASE("enumeration commands on the worked example") {
  TempDir dir("enum");
  const auto model = dir.file("example.bnet", oracle::worked_example);

  auto r = run({"trapspaces", "--min", model});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
  CHECK(line_set(r.out) == Set{"01*", "100"});

  r = run({"fixpoints", "--limit", "1", model});
  CHECK(r.out == "100\n");

  r = run({"trapspaces", "--min", "--within", "a=1", model});
  CHECK(r.out == "100\n");

  r = run({"trapspaces", "--max", model});
  CHECK(line_set(r.out) == Set{"10*", "01*"});

  r = run({"trapspaces", model});
  CHECK(line_set(r.out) == Set{"01*", "100"});

  r = run({"attractors", model, "--reachable-from", "010"});
  CHECK(r.out == "01*\n");
  r = run({"attractors", model, "--reachable-from", "a=0,b=0,c=0"});
  CHECK(line_set(r.out) == Set{"01*", "100"});

  r = run({"trapspaces", "--max", "--table", model});
  CHECK(lines(r.out).front() == "a b c");
  CHECK(lines(r.out).size() == 3);
}

TEST_CASE("table output aligns to component names") {
  TempDir dir("table");
  const auto model = dir.file("m.bnet", "alpha, alpha\nb, !alpha\n");
  const auto r = run({"fixpoints", "--table", model});
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "alpha b");
  CHECK(Set(rows.begin() + 1, rows.end()) == Set{"    0 1", "    1 0"});
}

TEST_CASE("JSON lines validate and round-trip") {
  TempDir dir("json");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto net = oracle::with_xor(seed, 6);
    const auto model = dir.file("m" + std::to_string(seed) + ".bnet", export_bnet(net));
    for (const char *cmd : {"fixpoints", "trapspaces"}) {
      for (const char *flag : {"--min", "--max"}) {
        std::vector<std::string> args{cmd, model, "--json"};
        if (std::string(cmd) == "trapspaces")
          args.push_back(flag);
        const auto r = run(args);
        REQUIRE(r.code == 0);
        for (const auto &line : lines(r.out)) {
          const auto doc = nlohmann::json::parse(line);
          REQUIRE(doc.size() == net.size());
          for (const auto &[key, value] : doc.items()) {
            CHECK(net.index_of(key).has_value());
            CHECK((value == "0" || value == "1" || value == "*"));
          }
          const Cube c = solution_from_json(line, net);
          CHECK(is_trap_space(net, c));
          if (std::string(cmd) == "fixpoints")
            CHECK(c.free_count() == 0);
        }
        if (std::string(cmd) == "fixpoints")
          break;
      }
    }
  }
}

TEST_CASE("reach command") {
  TempDir dir("reach");
  const auto model = dir.file("example.bnet", oracle::worked_example);
  CHECK(run({"reach", model, "000", "111", "--mode", "mp"}).out == "true\n");
  const auto no = run({"reach", model, "010", "100", "--mode", "mp"});
  CHECK(no.out == "false\n");
  CHECK(no.code == 0);
  CHECK(run({"reach", model, "100", "100", "--mode", "asynchronous"}).out == "true\n");
  CHECK(run({"reach", model, "000", "111"}).out == "true\n");
  CHECK(run({"reach", model, "00", "111"}).code == exit_usage);
  CHECK(run({"reach", model, "000", "111", "--mode", "warp"}).code == exit_usage);
}

TEST_CASE("graph commands") {
  TempDir dir("graph");
  const auto model = dir.file("example.bnet", oracle::worked_example);
  const auto r = run({"stg", model, "--mode", "synchronous", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["nodes"].size() == 8);
  std::map<std::string, int> degree;
  for (const auto &e : doc["edges"])
    ++degree[e[0].get<std::string>()];
  for (const auto &[node, d] : degree)
    CHECK(d <= 1);

  const auto dot = run({"influence", model, "--format", "dot"});
  std::size_t arrows = 0;
  for (const auto &line : lines(dot.out))
    arrows += line.find("->") != std::string::npos;
  CHECK(arrows == 5);

  const auto a = run({"stg", model});
  const auto b = run({"stg", model});
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("digraph stg {", 0) == 0);

  const auto empty = dir.file("empty.bnet", "");
  const auto e = run({"stg", empty, "--format", "json"});
  CHECK(nlohmann::json::parse(e.out)["nodes"] == nlohmann::json::array({""}));

  const auto mp = run({"stg", model, "--mode", "mp", "--format", "json"});
  CHECK(nlohmann::json::parse(mp.out)["nodes"].size() == 64);
  const auto proj = run({"stg", model, "--mp-projection", "--format", "json"});
  CHECK(nlohmann::json::parse(proj.out)["nodes"].size() == 8);
  const auto within = run({"stg", model, "--within", "01*", "--format", "json"});
  CHECK(nlohmann::json::parse(within.out)["nodes"].size() == 2);
}

TEST_CASE("exit codes") {
  TempDir dir("exit");
  const auto model = dir.file("example.bnet", oracle::worked_example);
  const auto bad = dir.file("bad.bnet", "a, b &\n");
  const auto undeclared = dir.file("undeclared.bnet", "a, q\n");
  CHECK(run({"fixpoints", bad}).code == exit_parse);
  CHECK(run({"fixpoints", undeclared}).code == exit_parse);
  const auto r = run({"fixpoints", bad});
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({}).code == exit_usage);
  CHECK(run({"fixpoints"}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"trapspaces", "--min", "--max", model}).code == exit_usage);
  CHECK(run({"fixpoints", "--limit", "0", model}).code == exit_usage);
  CHECK(run({"fixpoints", "--within", "0*", model}).code == exit_usage);
  CHECK(run({"fixpoints", dir.path() + "/missing.bnet"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("export command round-trips") {
  TempDir dir("export");
  const auto model = dir.file("example.bnet", oracle::worked_example);
  const auto once = run({"export", model});
  CHECK(once.out == "targets, factors\na, !b\nb, !a\nc, (!a & !c) | (b & !c)\n");
  const auto again = run({"export", dir.file("again.bnet", once.out)});
  CHECK(again.out == once.out);
}

TEST_CASE("generator") {
  GenSpec spec;
  spec.nodes = 100;
  spec.seed = 1;
  CHECK(generate_bnet(spec) == generate_bnet(spec));
  GenSpec other = spec;
  other.seed = 2;
  CHECK(generate_bnet(spec) != generate_bnet(other));

  spec.nodes = 10;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    spec.seed = seed;
    for (auto family : {Family::inhibitor_dominant, Family::nested_canalizing_unate}) {
      spec.family = family;
      const auto net = generate_network(spec);
      CHECK(net.size() == 10);
      for (ComponentIndex i = 0; i < net.size(); ++i)
        CHECK(net.function(i).is_unate());
    }
  }

  spec.nodes = 1;
  spec.family = Family::inhibitor_dominant;
  const auto one = generate_network(spec);
  CHECK(one.size() == 1);
  CHECK(!one.function(0).dnf().support().empty());

  spec.nodes = 0;
  CHECK_THROWS_AS(generate_bnet(spec), Error);
  CHECK(parse_family("nested-canalizing-unate") == Family::nested_canalizing_unate);
  CHECK_THROWS_AS(parse_family("random"), Error);
}

TEST_CASE("generator in-degrees follow the power law shape") {
  GenSpec spec;
  spec.nodes = 5000;
  spec.gamma = 2.5;
  const auto net = generate_network(spec);
  std::map<std::size_t, std::size_t> histogram;
  for (ComponentIndex i = 0; i < net.size(); ++i)
    ++histogram[net.function(i).dnf().support().size()];
  CHECK(histogram[1] > histogram[2]);
  CHECK(histogram[2] > histogram[3]);
  CHECK(histogram[1] > net.size() / 2);
}

TEST_CASE("generate command writes identical files") {
  TempDir dir("gen");
  const auto a = dir.path() + "/a.bnet", b = dir.path() + "/b.bnet";
  CHECK(run({"generate", "--nodes", "100", "--seed", "1", "--out", a}).code == 0);
  CHECK(run({"generate", "--nodes", "100", "--seed", "1", "--out", b}).code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(parse_bnet(sa.str()).size() == 100);
  CHECK(run({"generate", "--nodes", "5", "--family", "nested-canalizing-unate"}).code == 0);
  CHECK(run({"generate", "--nodes", "0"}).code == exit_usage);
}

TEST_CASE("bench on small suites") {
  TempDir dir("bench");
  const auto empty_suite = dir.path() + "/empty";
  fs::create_directories(empty_suite);
  auto r = run({"bench", "--suite", empty_suite, "--problem", "min"});
  CHECK(r.code == 0);
  const auto empty_lines = lines(r.out);
  CHECK(empty_lines.front() == "model\tproblem\tseconds\tstatus");
  CHECK(run_bench(empty_suite, {}).empty());
  CHECK(cumulative_counts({}) == std::array<std::size_t, 6>{});

  const auto suite = dir.path() + "/one";
  fs::create_directories(suite);
  std::ofstream(suite + "/example.bnet") << oracle::worked_example;
  BenchOptions opts;
  opts.problem = Problem::minimal_trap_spaces;
  const auto records = run_bench(suite, opts);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == BenchStatus::ok);
  CHECK(records[0].seconds < 0.5);
  CHECK(cumulative_counts(records)[0] == 1);

  opts.timeout_seconds = 0.000001;
  const auto forced = run_bench(suite, opts);
  CHECK(forced[0].status == BenchStatus::timeout);
  CHECK(cumulative_counts(forced) == std::array<std::size_t, 6>{});

  std::ofstream(suite + "/broken.bnet") << "a, (\n";
  std::ofstream(suite + "/notes.txt") << "ignored";
  opts.timeout_seconds = 10;
  const auto mixed = run_bench(suite, opts);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].model == "broken.bnet");
  CHECK(mixed[0].status == BenchStatus::error);
  CHECK(mixed[1].status == BenchStatus::ok);

  const auto tsv_path = dir.path() + "/out.tsv";
  r = run({"bench", "--suite", suite, "--problem", "fix", "--timeout", "5", "--out", tsv_path});
  CHECK(r.code == 0);
  std::ifstream tsv(tsv_path);
  std::stringstream content;
  content << tsv.rdbuf();
  const auto rows = lines(content.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind("broken.bnet\tfix\t", 0) == 0);
  CHECK(rows[1].substr(rows[1].rfind('\t') + 1) == "error");
  const auto table = lines(r.out);
  REQUIRE(table.size() == 2);
  CHECK(table[0] == "problem  models  <0.5s  <2s  <10s  <1min  <10min  <1h");
}

TEST_CASE("parallel bench matches sequential statuses") {
  TempDir dir("par");
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenSpec spec;
    spec.nodes = 200;
    spec.seed = seed;
    std::ofstream(dir.path() + "/g" + std::to_string(seed) + ".bnet") << generate_bnet(spec);
  }
  BenchOptions seq;
  BenchOptions par = seq;
  par.jobs = 3;
  const auto a = run_bench(dir.path(), seq);
  const auto b = run_bench(dir.path(), par);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].model == b[k].model);
    CHECK(a[k].status == b[k].status);
  }
}

TEST_CASE("repeat runs print identical output") {
  TempDir dir("det");
  GenSpec spec;
  spec.nodes = 300;
  spec.seed = 9;
  const auto model = dir.file("g.bnet", generate_bnet(spec));
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"trapspaces", "--min", model, "--limit", "20"},
           {"trapspaces", "--max", model, "--limit", "20", "--seed", "77"},
           {"fixpoints", model, "--limit", "20", "--json"}}) {
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}
