#pragma once

#include <random>
#include <string>
#include <vector>

#include "freeboole/compose.hpp"
#include "freeboole/core.hpp"
#include "freeboole/free_construct.hpp"
#include "freeboole/graphs.hpp"
#include "freeboole/invariants.hpp"
#include "freeboole/io.hpp"
#include "freeboole/topology.hpp"

namespace freeboole {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Scale knobs for the verification suite; the defaults are the supported
/// configuration and run in well under the documented time budgets.
struct CheckScale {
  std::uint64_t seed = 1729;
  int exhaustive_graph_vertices = 5;
  int random_graph_count = 200;
  int random_graph_vertices = 8;
  int exhaustive_hyper_vertices = 4;
  int extension_samples = 500;
  int compose_vertices = 3;
  int powerset_limit = 5;
  int bridge_samples = 500;
  int norm_samples = 10000;
  int topology_vertices = 4;
};

/// Runs the whole property suite at the given scale; deterministic for a
/// fixed scale (all sampling is seeded).
std::vector<CheckResult> run_theorem_checks(const CheckScale& scale = {});

/// Runs one named check from the suite.
CheckResult run_single_check(const std::string& name, const CheckScale& scale = {});

/// Structure-level checks for user-supplied inputs: round trips for graphs
/// and hypergraphs, induced-map extension for posets.
CheckResult check_structure(const Structure& s, const std::string& name,
                            std::uint64_t cap = kDefaultAnticliqueCap);

// Enumeration helpers used by the suite and the tests.
std::vector<Graph> all_graphs(int n);                              // labeled, exactly n vertices
std::vector<Hypergraph> all_hypergraphs(int n, int max_edge_size); // all edge subsets
std::vector<Hypergraph> all_normalized_hypergraphs(int n);         // edge antichains
Graph random_graph(std::mt19937_64& rng, int n);

}  // namespace freeboole
