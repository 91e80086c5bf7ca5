#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "freeboole/io.hpp"
#include "freeboole/run.hpp"

using namespace freeboole;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/freeboole_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("parsing graphs") {
  std::istringstream in("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
  Graph g = parse_graph(in, "p3");
  CHECK(g == Graph::path(3));

  SUBCASE("duplicates are dropped") {
    std::istringstream dup("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n");
    CHECK(parse_graph(dup, "dup").edge_count() == 1);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream bad("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_WITH_AS(parse_graph(bad, "bad"), "bad:2: vertex id 5 out of range",
                         ParseError);
    std::istringstream loop("p edge 2 1\ne 1 1\n");
    CHECK_THROWS_WITH_AS(parse_graph(loop, "loop"), "loop:2: loop edge", ParseError);
    std::istringstream noheader("e 1 2\n");
    CHECK_THROWS_AS(parse_graph(noheader, "x"), ParseError);
    std::istringstream wrongkind("p hyper 3 1\nh 1 2 3\n");
    CHECK_THROWS_AS(parse_graph(wrongkind, "x"), ParseError);
  }
}

TEST_CASE("parsing hypergraphs and posets") {
  std::istringstream in("p hyper 3 1\nh 1 2 3\n");
  Hypergraph h = parse_hypergraph(in, "tri");
  CHECK(h.edge_masks() == std::vector<std::uint64_t>{0b111});

  std::istringstream small("p hyper 3 1\nh 2\n");
  CHECK_THROWS_WITH_AS(parse_hypergraph(small, "small"),
                       "small:2: hyperedge needs at least two vertices", ParseError);

  std::istringstream chain("p order 3 2\nr 1 2\nr 2 3\n");
  Poset p = parse_poset(chain, "chain");
  CHECK(p.less(0, 2));  // closure adds 1 < 3

  std::istringstream cyc("p order 2 2\nr 1 2\nr 2 1\n");
  CHECK_THROWS_AS(parse_poset(cyc, "cyc"), ParseError);
}

TEST_CASE("structure dispatch and writers") {
  std::istringstream in("c comment first\np order 2 1\nr 1 2\n");
  Structure s = parse_structure(in, "o");
  CHECK(std::holds_alternative<Poset>(s));

  Graph g = Graph::path(3);
  std::istringstream back(write_graph(g));
  CHECK(parse_graph(back, "w") == g);

  Hypergraph h(4, std::vector<std::vector<int>>{{0, 1, 2}, {1, 3}});
  std::istringstream hback(write_hypergraph(h));
  CHECK(parse_hypergraph(hback, "w") == h);
}

TEST_CASE("run: algebra and independence reports") {
  std::string k4 = write_temp("k4.g",
                              "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  RunConfig config;
  config.command = "algebra";
  config.inputs = {k4};
  RunResult r = run(config);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"atoms\": 5") != std::string::npos);
  CHECK(r.output.find("\"size\": 32") != std::string::npos);

  config.command = "independence";
  config.n = Degree::finite(2);
  RunResult ri = run(config);
  CHECK(ri.output.find("\"omega_independent\": true") != std::string::npos);
  CHECK(ri.output.find("\"within_requested_degree\": true") != std::string::npos);

  SUBCASE("reports are byte-stable") {
    CHECK(run(config).output == ri.output);
  }
  std::remove(k4.c_str());
}

TEST_CASE("run: perp output round trip") {
  std::string p3 = write_temp("p3.g", "p edge 3 2\ne 1 2\ne 2 3\n");
  RunConfig config;
  config.command = "perp";
  config.inputs = {p3};
  RunResult r = run(config);
  CHECK(r.output.substr(0, 11) == "p hyper 3 2");

  std::string perp_path = write_temp("p3_perp.hg", r.output);
  RunConfig again;
  again.command = "algebra";
  again.inputs = {perp_path};
  RunResult ra = run(again);
  CHECK(ra.output.find("\"atoms\": 5") != std::string::npos);  // same atom count as BA(P3)
  std::remove(p3.c_str());
  std::remove(perp_path.c_str());
}

TEST_CASE("run: roundtrip exit code") {
  std::string p3 = write_temp("rt.g", "p edge 3 2\ne 1 2\ne 2 3\n");
  RunConfig config;
  config.command = "roundtrip";
  config.inputs = {p3};
  CHECK(run(config).exit_code == 0);
  std::remove(p3.c_str());
}

TEST_CASE("run: extend with a map file") {
  std::string k3 = write_temp("k3.g", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  std::string k3b = write_temp("k3b.g", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  // K3 has anticliques {}, {a}, {b}, {c}: atoms 1..4 in report order.
  std::string good = write_temp("map_good.m", "m 1 2\nm 2 3\nm 3 4\n");
  std::string bad = write_temp("map_bad.m", "m 1 2 3\nm 2 2 3\nm 3 4\n");

  RunConfig config;
  config.command = "extend";
  config.inputs = {k3, k3b, good};
  RunResult r = run(config);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"extends\": true") != std::string::npos);

  config.inputs = {k3, k3b, bad};
  RunResult rb = run(config);
  CHECK(rb.output.find("\"extends\": false") != std::string::npos);

  std::string incomplete = write_temp("map_bad2.m", "m 1 2\n");
  config.inputs = {k3, k3b, incomplete};
  CHECK_THROWS_AS(run(config), ParseError);

  for (const auto& p : {k3, k3b, good, bad, incomplete}) std::remove(p.c_str());
}

TEST_CASE("run: compose") {
  std::string p3 = write_temp("cp3.g", "p edge 3 2\ne 1 2\ne 2 3\n");
  std::string k2 = write_temp("ck2.g", "p edge 2 1\ne 1 2\n");
  RunConfig config;
  config.command = "compose";
  config.compose_op = "free";
  config.inputs = {p3, k2};
  RunResult r = run(config);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"atoms\": 15") != std::string::npos);  // 5 * 3
  CHECK(r.output.find("\"matches_disjoint_union\": true") != std::string::npos);

  config.compose_op = "product";
  RunResult rp = run(config);
  CHECK(rp.output.find("\"atoms\": 8") != std::string::npos);  // 5 + 3

  config.compose_op = "amalgam";
  std::string shared = write_temp("cshared.g", "p edge 1 0\n");
  config.shared_path = shared;
  RunResult ra = run(config);
  CHECK(ra.exit_code == 0);
  CHECK(ra.output.find("\"glued_vertices\": 4") != std::string::npos);

  for (const auto& p : {p3, k2, shared}) std::remove(p.c_str());
}

TEST_CASE("run: budget errors propagate") {
  std::string big = write_temp("big.g", "p edge 8 0\n");
  RunConfig config;
  config.command = "anticliques";
  config.inputs = {big};
  config.anticlique_cap = 10;
  CHECK_THROWS_AS(run(config), BudgetError);
  std::remove(big.c_str());
}

TEST_CASE("budget override env parsing") {
  // Only checks the parse; the CLI applies it to the default cap.
  setenv("FREEBOOLE_BUDGET_DEFAULT", "123456", 1);
  CHECK(budget_override_from_env() == std::uint64_t{123456});
  setenv("FREEBOOLE_BUDGET_DEFAULT", "nonsense", 1);
  CHECK(!budget_override_from_env().has_value());
  unsetenv("FREEBOOLE_BUDGET_DEFAULT");
  CHECK(!budget_override_from_env().has_value());
}
