#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dlucky/cli.hpp"
#include "dlucky/io.hpp"

using namespace dlucky;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("dlucky_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen writes canonical graphs") {
  const auto web = run({"gen", "web", "--m", "3", "--n", "6"});
  REQUIRE(web.code == 0);
  CHECK(graph_from_json(web.out).vertex_count() == 48);

  const auto corona = run({"gen", "corona", "--n", "5", "--r", "4"});
  const Graph g = graph_from_json(corona.out);
  CHECK(g.vertex_count() == 25);
  CHECK(g.edge_count() == 30);

  CHECK(graph_from_json(run({"gen", "cocktail", "--n", "3", "--t", "8", "--r", "4"}).out)
            .vertex_count() == 120);
  CHECK(run({"gen", "complete", "--n", "4"}).out == "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n");
  CHECK(graph_from_json(run({"gen", "path", "--m", "4"}).out).edge_count() == 3);
  CHECK(graph_from_json(run({"gen", "cycle", "--n", "5"}).out).edge_count() == 5);
  CHECK(graph_from_json(run({"gen", "cylinder", "--m", "3", "--n", "6"}).out).vertex_count() == 18);
  CHECK(graph_from_json(run({"gen", "multipartite", "--n", "2", "--t", "3"}).out).edge_count() == 12);
}

TEST_CASE("gen rejects bad parameters with exit 2") {
  const auto web = run({"gen", "web", "--m", "3", "--n", "4"});
  CHECK(web.code == 2);
  CHECK(web.err.find("n >= 5") != std::string::npos);
  CHECK(run({"gen", "cocktail", "--n", "3", "--t", "1", "--r", "2"}).code == 2);
  CHECK(run({"gen", "web", "--m", "3"}).code == 2);
  CHECK(run({"gen", "complete", "--n", "3", "--r", "1"}).code == 2);
  CHECK(run({"gen", "moebius", "--n", "3"}).code == 2);
  CHECK(run({"gen", "complete", "--n", "3", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"gen", "cycle", "--n", "2"}).code == 2);
}

TEST_CASE("label reports the claimed eta") {
  TempDir dir;
  const std::string out = dir.file("l.json");
  const auto corona = run({"label", "corona", "--n", "11", "--r", "1", "--out", out});
  REQUIRE(corona.code == 0);
  CHECK(corona.out.find("claimed_eta: 6") != std::string::npos);
  CHECK(corona.out.find("verified: yes") != std::string::npos);
  CHECK(labeling_from_json(slurp(out)).labeling.size() == 22);

  CHECK(run({"label", "web", "--m", "4", "--n", "6", "--out", out}).out.find("claimed_eta: 4") !=
        std::string::npos);
  CHECK(run({"label", "cocktail", "--n", "3", "--t", "8", "--r", "4", "--out", out})
            .out.find("claimed_eta: 2") != std::string::npos);

  // Stdout output keeps the summary on stderr.
  const auto piped = run({"label", "corona", "--n", "3", "--r", "1"});
  CHECK(labeling_from_json(piped.out).labeling.size() == 6);
  CHECK(piped.err.find("claimed_eta: 2") != std::string::npos);

  CHECK(run({"label", "complete", "--n", "3"}).code == 2);
}

TEST_CASE("verify exit codes") {
  TempDir dir;
  const std::string g = dir.file("g.json"), l = dir.file("l.json");
  REQUIRE(run({"gen", "web", "--m", "3", "--n", "6", "--out", g}).code == 0);
  REQUIRE(run({"label", "web", "--m", "3", "--n", "6", "--out", l}).code == 0);
  const auto ok = run({"verify", g, l});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("d-lucky: yes") != std::string::npos);

  std::ofstream(dir.file("k2.json")) << "{\"n\":2,\"edges\":[[0,1]]}\n";
  std::ofstream(dir.file("ones.json")) << "{\"labels\":[1,1]}\n";
  std::ofstream(dir.file("three.json")) << "{\"labels\":[1,1,1]}\n";
  const auto bad = run({"verify", dir.file("k2.json"), dir.file("ones.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("conflicts: 1") != std::string::npos);
  CHECK(bad.out.find("{0,1} d-sum 2") != std::string::npos);

  const auto json = run({"verify", dir.file("k2.json"), dir.file("ones.json"), "--json"});
  CHECK(json.code == 1);
  CHECK(json.out ==
        "{\"conflicts\":[{\"edge\":[0,1],\"dsum\":2}],\"d_sums\":[2,2],\"max_label\":1}\n");

  CHECK(run({"verify", dir.file("k2.json"), dir.file("three.json")}).code == 2);
  CHECK(run({"verify", dir.file("k2.json"), dir.file("missing.json")}).code == 2);
  CHECK(run({"verify", "-", dir.file("ones.json")}, "{\"n\":2,\"edges\":[[0,1]]}").code == 1);
}

TEST_CASE("bound") {
  const std::string web = run({"gen", "web", "--m", "3", "--n", "6"}).out;
  const auto r = run({"bound", "-"}, web);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("bound: 4") != std::string::npos);
  CHECK(r.out.find("omega: 6") != std::string::npos);
  CHECK(r.out.find("clique: 18 19 20 21 22 23") != std::string::npos);

  const auto json = run({"bound", "-", "--json"}, run({"gen", "complete", "--n", "5"}).out);
  CHECK(json.out == "{\"bound\":5,\"omega\":5,\"clique\":[0,1,2,3,4],\"delta\":4,\"max_deg\":4}\n");

  const std::string big = run({"gen", "web", "--m", "6", "--n", "16"}).out;
  CHECK(run({"bound", "-"}, big).code == 1);
  CHECK(run({"bound", "-", "--vertex-cap", "256"}, big).out.find("bound: 9") != std::string::npos);
  CHECK(run({"bound", "-"}, "{\"n\":2,\"edges\":[]}").code == 2);
}

TEST_CASE("solve") {
  const std::string p4 = run({"gen", "path", "--m", "4"}).out;
  const auto r = run({"solve", "-"}, p4);
  CHECK(r.code == 0);
  CHECK(r.out.find("eta: 2") != std::string::npos);
  CHECK(run({"solve", "-", "--json"}, p4).out.rfind("{\"eta\":2,\"witness\":[1,1,1,2]", 0) == 0);

  const std::string k4 = run({"gen", "complete", "--n", "4"}).out;
  const auto capped = run({"solve", "-", "--max-k", "3"}, k4);
  CHECK(capped.code == 1);
  CHECK(capped.out.find("exceeds budget") != std::string::npos);

  const std::string p20 = run({"gen", "path", "--m", "20"}).out;
  CHECK(run({"solve", "-"}, p20).code == 1);
  CHECK(run({"solve", "-", "--vertex-cap", "20", "--max-k", "3"}, p20).code == 0);
  CHECK(run({"solve", "-", "--max-k", "0"}, p4).code == 2);
}

TEST_CASE("export-dot") {
  TempDir dir;
  const std::string g = dir.file("g.json"), l = dir.file("l.json");
  REQUIRE(run({"gen", "corona", "--n", "5", "--r", "4", "--out", g}).code == 0);
  REQUIRE(run({"label", "corona", "--n", "5", "--r", "4", "--out", l}).code == 0);
  const auto dot = run({"export-dot", g, "--labeling", l});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  CHECK(dot.out.find("dsum=") != std::string::npos);
  CHECK(dot.out.find("role=\"clique\"") != std::string::npos);
  CHECK(run({"export-dot", g, "--labeling", l}).out == dot.out);

  const auto plain = run({"export-dot", g});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("dsum=") == std::string::npos);

  std::ofstream(dir.file("junk.json")) << "{\"labels\":[0]}";
  CHECK(run({"export-dot", g, "--labeling", dir.file("junk.json")}).code == 2);
}
