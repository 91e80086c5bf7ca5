// End-to-end tests driving the built binary.  The test runner provides
// FREEBOOLE_BIN and FREEBOOLE_DATA.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  const char* bin = std::getenv("FREEBOOLE_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("FREEBOOLE_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("algebra command") {
  auto r = run_cli("algebra " + data_file("k4.g"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"anticliques\": 5") != std::string::npos);
  CHECK(r.output.find("\"atoms\": 5") != std::string::npos);
  CHECK(r.output.find("\"size\": 32") != std::string::npos);
}

TEST_CASE("independence command with a degree request") {
  auto r = run_cli("independence --n 2 " + data_file("p3.g"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"degree\": 2") != std::string::npos);
  CHECK(r.output.find("\"within_requested_degree\": true") != std::string::npos);
}

TEST_CASE("roundtrip command succeeds on the corpus") {
  for (const char* name : {"k4.g", "p3.g", "c5.g", "bull5.g", "star4.g", "empty4.g",
                           "k5.g", "one_edge3.g", "triangle_edge.hg", "k4_triples.hg"}) {
    auto r = run_cli("roundtrip " + data_file(name));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"roundtrip\": true") != std::string::npos);
  }
}

TEST_CASE("perp output feeds back through the parser") {
  auto perp = run_cli("perp " + data_file("k4.g"));
  CHECK(perp.exit_code == 0);
  std::string tmp = "/tmp/freeboole_cli_perp.hg";
  {
    std::ofstream out(tmp);
    out << perp.output;
  }
  auto algebra = run_cli("algebra " + tmp);
  CHECK(algebra.exit_code == 0);
  CHECK(algebra.output.find("\"atoms\": 5") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("reports are deterministic") {
  std::string cmd = "invariants " + data_file("p3.g");
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("compose commands") {
  auto free = run_cli("compose --op free " + data_file("k4.g") + " " + data_file("k4.g"));
  CHECK(free.exit_code == 0);
  CHECK(free.output.find("\"atoms\": 25") != std::string::npos);
  CHECK(free.output.find("\"size\": 33554432") != std::string::npos);  // 2^25

  auto amalgam = run_cli("compose --op amalgam --shared " + data_file("k2.g") + " " +
                         data_file("k4.g") + " " + data_file("k4.g"));
  CHECK(amalgam.exit_code == 0);
  CHECK(amalgam.output.find("\"glued_vertices\": 6") != std::string::npos);
}

TEST_CASE("topology command") {
  auto r = run_cli("topology --cmpn " + data_file("triangle_edge.hg"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"cmpn_upper\": 3") != std::string::npos);
  auto g = run_cli("topology --nary 2 " + data_file("p3.g"));
  CHECK(g.output.find("\"nary\": true") != std::string::npos);
}

TEST_CASE("error exit codes") {
  // Budget errors exit with 2.
  auto budget = run_cli("anticliques --cap 3 " + data_file("empty4.g"));
  CHECK(budget.exit_code == 2);
  // Parse errors exit with 2.
  std::string bad = "/tmp/freeboole_cli_bad.g";
  {
    std::ofstream out(bad);
    out << "p edge 2 1\ne 1 7\n";
  }
  auto parse = run_cli("roundtrip " + bad);
  CHECK(parse.exit_code == 2);
  std::remove(bad.c_str());
  // Missing files exit with 2.
  CHECK(run_cli("algebra /tmp/does_not_exist.g").exit_code == 2);
}
