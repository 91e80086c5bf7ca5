#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "freeboole/run.hpp"

namespace {

void add_common(CLI::App* cmd, freeboole::RunConfig& config) {
  cmd->add_option("--cap", config.anticlique_cap, "anticlique enumeration cap");
  cmd->add_option("--budget", config.member_budget, "family member budget");
  cmd->add_option("--atoms", config.atom_budget, "atom budget for exhaustive searches");
  cmd->add_option("--seed", config.seed, "seed for sampled checks");
}

std::string degree_help = "degree: a positive integer or 'omega'";

void add_degree_option(CLI::App* cmd, std::optional<freeboole::Degree>& slot) {
  cmd->add_option_function<std::string>(
      "--n",
      [&slot](const std::string& v) {
        if (v == "omega")
          slot = freeboole::Degree::omega();
        else
          slot = freeboole::Degree::finite(std::stoi(v));
      },
      degree_help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Boolean set algebras from graphs and hypergraphs"};
  app.require_subcommand(1);

  freeboole::RunConfig config;
  if (auto env = freeboole::budget_override_from_env())
    config.anticlique_cap = std::max(config.anticlique_cap, *env);
  std::string out_path;
  app.add_option("--out", out_path, "write the report to this path instead of stdout");

  auto* anticliques = app.add_subcommand("anticliques", "enumerate the anticliques of a structure");
  anticliques->add_option("input", config.inputs, "structure file")->required();
  add_common(anticliques, config);

  auto* algebra = app.add_subcommand("algebra", "build the anticlique or clique algebra");
  algebra->add_option("input", config.inputs)->required();
  algebra->add_option("--kind", config.algebra_kind, "ba (anticliques) or bc (cliques)")
      ->check(CLI::IsMember({"ba", "bc"}));
  add_common(algebra, config);

  auto* independence = app.add_subcommand("independence", "independence report for the vertex family");
  independence->add_option("input", config.inputs)->required();
  add_degree_option(independence, config.n);
  add_common(independence, config);

  auto* perp = app.add_subcommand("perp", "emit the perp hypergraph of the vertex family");
  perp->add_option("input", config.inputs)->required();
  add_common(perp, config);

  auto* roundtrip = app.add_subcommand("roundtrip", "structure -> algebra -> structure round trip");
  roundtrip->add_option("input", config.inputs)->required();
  add_common(roundtrip, config);

  auto* extend = app.add_subcommand("extend", "extend a generator map between two algebras");
  extend->add_option("inputs", config.inputs, "SOURCE TARGET MAPFILE")->expected(3);
  add_degree_option(extend, config.n);
  add_common(extend, config);

  auto* compose = app.add_subcommand("compose", "products, free products, amalgams");
  compose->add_option("inputs", config.inputs, "graph files")->required();
  compose->add_option("--op", config.compose_op)->check(CLI::IsMember({"product", "free", "amalgam"}));
  compose->add_option("--shared", config.shared_path, "shared graph file for --op amalgam");
  compose->add_option("--embed", config.embeddings,
                      "FACTOR:v1,v2,... shared-vertex images (default: identity)");
  add_common(compose, config);

  auto* invariants = app.add_subcommand("invariants", "family and algebra invariants");
  invariants->add_option("input", config.inputs)->required();
  add_degree_option(invariants, config.n);
  add_common(invariants, config);

  auto* topology = app.add_subcommand("topology", "subbase arity analysis");
  topology->add_option("input", config.inputs)->required();
  topology->add_option("--nary", config.nary, "test the canonical subbase for n-arity");
  topology->add_flag("--cmpn", config.cmpn, "compute the least canonical arity");
  add_common(topology, config);

  auto* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("inputs", config.inputs, "extra structure files to round-trip");
  add_common(verify, config);

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();

  try {
    auto start = std::chrono::steady_clock::now();
    freeboole::RunResult result = freeboole::run(config);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << result.output;
    }
    std::cerr << "# elapsed_ms=" << elapsed << "\n";
    return result.exit_code;
  } catch (const freeboole::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
