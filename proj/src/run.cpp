#include "freeboole/run.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freeboole/checks.hpp"
#include "freeboole/compose.hpp"
#include "freeboole/free_construct.hpp"
#include "freeboole/invariants.hpp"
#include "freeboole/io.hpp"
#include "freeboole/topology.hpp"

namespace freeboole {

namespace {

using Json = nlohmann::ordered_json;

Json base_report(const RunConfig& config) {
  Json report;
  report["schema"] = 1;
  report["command"] = config.command;
  report["inputs"] = Json::array();
  for (const auto& path : config.inputs)
    report["inputs"].push_back({{"path", path}, {"digest", file_digest(path)}});
  return report;
}

// Report indices are 0-based; only file ids are 1-based.
Json index_list(const std::vector<int>& v) { return Json(v); }

Json degree_json(const Degree& d) {
  if (d.is_omega()) return Json("omega");
  return Json(d.value());
}

StructureAlgebra structure_algebra(const Structure& s, const RunConfig& config,
                                   bool cliques = false) {
  if (const Graph* g = std::get_if<Graph>(&s))
    return cliques ? clique_algebra(*g, config.anticlique_cap)
                   : anticlique_algebra(*g, config.anticlique_cap);
  if (const Hypergraph* h = std::get_if<Hypergraph>(&s)) {
    if (cliques) throw PreconditionError("clique algebras are defined for graphs only");
    return anticlique_algebra(*h, config.anticlique_cap);
  }
  throw PreconditionError("this command expects a graph or hypergraph input");
}

Structure require_input(const RunConfig& config, std::size_t index = 0) {
  if (config.inputs.size() <= index)
    throw PreconditionError("command '" + config.command + "' needs an input file");
  return parse_structure_file(config.inputs[index]);
}

Json independence_json(const IndependenceReport& rep) {
  Json out;
  out["omega_independent"] = rep.omega_independent;
  out["degree"] = rep.degree ? degree_json(*rep.degree) : Json(nullptr);
  out["violations"] = Json::array();
  for (const auto& v : rep.violations)
    out["violations"].push_back(
        {{"kind", v.kind == IndependenceViolation::Kind::sum_is_one ? "sum_is_one"
                                                                    : "covered_by_rest"},
         {"subset", index_list(v.subset)}});
  return out;
}

RunResult run_anticliques(const RunConfig& config) {
  Structure s = require_input(config);
  AnticliqueIndex index;
  if (const Graph* g = std::get_if<Graph>(&s))
    index = enumerate_anticliques(*g, config.anticlique_cap);
  else if (const Hypergraph* h = std::get_if<Hypergraph>(&s))
    index = enumerate_anticliques(*h, config.anticlique_cap);
  else
    throw PreconditionError("anticliques are defined for graphs and hypergraphs");

  Json report = base_report(config);
  Json& r = report["results"];
  r["vertex_count"] = index.vertex_count;
  r["count"] = index.count();
  if (index.count() <= 4096) {
    r["anticliques"] = Json::array();
    for (auto mask : index.sets) {
      std::vector<int> members;
      for (int v = 0; v < index.vertex_count; ++v)
        if ((mask >> v) & 1) members.push_back(v);
      r["anticliques"].push_back(index_list(members));
    }
  } else {
    r["anticliques"] = nullptr;
  }
  return {0, report.dump(2) + "\n"};
}

RunResult run_algebra(const RunConfig& config) {
  Structure s = require_input(config);
  StructureAlgebra sa = structure_algebra(s, config, config.algebra_kind == "bc");
  Json report = base_report(config);
  Json& r = report["results"];
  r["kind"] = config.algebra_kind;
  r["anticliques"] = sa.index.count();
  r["atoms"] = sa.algebra.atom_count();
  auto size = sa.algebra.size();
  r["size"] = size ? Json(*size) : Json(nullptr);
  r["log2_size"] = sa.algebra.atom_count();
  r["generators"] = sa.vertex_family.size();
  return {0, report.dump(2) + "\n"};
}

RunResult run_independence(const RunConfig& config) {
  Structure s = require_input(config);
  StructureAlgebra sa = structure_algebra(s, config);
  auto rep = independence_report(sa.vertex_family, config.member_budget);
  Json report = base_report(config);
  report["results"] = independence_json(rep);
  report["results"]["family_size"] = sa.vertex_family.size();
  if (config.n) {
    bool within = rep.omega_independent && *rep.degree <= *config.n;
    report["results"]["within_requested_degree"] = within;
  }
  return {0, report.dump(2) + "\n"};
}

RunResult run_perp(const RunConfig& config) {
  Structure s = require_input(config);
  StructureAlgebra sa = structure_algebra(s, config);
  PerpHypergraph perp = perp_hypergraph(sa.vertex_family, config.member_budget);
  return {0, write_hypergraph(perp.hypergraph)};
}

RunResult run_roundtrip(const RunConfig& config) {
  Structure s = require_input(config);
  bool pass = false;
  if (const Graph* g = std::get_if<Graph>(&s))
    pass = roundtrip_check(*g, config.anticlique_cap);
  else if (const Hypergraph* h = std::get_if<Hypergraph>(&s))
    pass = roundtrip_check(h->normalized() ? *h : h->normalize(), config.anticlique_cap);
  else
    throw PreconditionError("round trips are defined for graphs and hypergraphs");
  Json report = base_report(config);
  report["results"]["roundtrip"] = pass;
  return {pass ? 0 : 1, report.dump(2) + "\n"};
}

// Map file: lines `m i j1 j2 ...` give the image of generator i as the union
// of target atoms j1, j2, ...; ids are 1-based.
std::vector<Element> parse_map_file(const std::string& path, int family_size,
                                    const SetAlgebra& target) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::vector<std::optional<Element>> images(family_size);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (tag != "m") throw ParseError(path + ":" + std::to_string(ln) + ": expected an 'm' line");
    int i;
    if (!(iss >> i) || i < 1 || i > family_size)
      throw ParseError(path + ":" + std::to_string(ln) + ": generator index out of range");
    Element img = target.zero();
    int j;
    while (iss >> j) {
      if (j < 1 || j > target.atom_count())
        throw ParseError(path + ":" + std::to_string(ln) + ": atom index out of range");
      img = img | target.atoms()[j - 1];
    }
    images[i - 1] = img;
  }
  std::vector<Element> out;
  for (int i = 0; i < family_size; ++i) {
    if (!images[i])
      throw ParseError(path + ": no image given for generator " + std::to_string(i + 1));
    out.push_back(*images[i]);
  }
  return out;
}

RunResult run_extend(const RunConfig& config) {
  if (config.inputs.size() != 3)
    throw PreconditionError("extend needs SOURCE TARGET MAPFILE");
  StructureAlgebra src = structure_algebra(parse_structure_file(config.inputs[0]), config);
  StructureAlgebra dst = structure_algebra(parse_structure_file(config.inputs[1]), config);
  auto images = parse_map_file(config.inputs[2], src.vertex_family.size(), dst.algebra);

  PartialMap pm(src.vertex_family, dst.algebra, images);
  auto hom = sikorski_extends(pm);
  Json report = base_report(config);
  Json& r = report["results"];
  r["source_generators"] = src.vertex_family.size();
  r["target_atoms"] = dst.algebra.atom_count();
  r["extends"] = hom.has_value();
  if (config.n) r["n_preserving"] = is_n_preserving(pm, *config.n);
  if (hom) {
    r["atom_images"] = Json::array();
    for (const auto& img : hom->atom_images()) {
      std::vector<int> atoms;
      for (int i = 0; i < dst.algebra.atom_count(); ++i)
        if (dst.algebra.atoms()[i].subset_of(img)) atoms.push_back(i);
      r["atom_images"].push_back(index_list(atoms));
    }
  }
  return {0, report.dump(2) + "\n"};
}

std::vector<Graph> parse_graph_inputs(const RunConfig& config) {
  std::vector<Graph> graphs;
  for (const auto& path : config.inputs) graphs.push_back(parse_graph_file(path));
  return graphs;
}

RunResult run_compose(const RunConfig& config) {
  Json report = base_report(config);
  Json& r = report["results"];
  r["op"] = config.compose_op;
  int exit_code = 0;

  if (config.compose_op == "product") {
    auto graphs = parse_graph_inputs(config);
    if (graphs.size() < 2) throw PreconditionError("product needs at least two graphs");
    std::vector<GeneratorFamily> families;
    for (const auto& g : graphs)
      families.push_back(anticlique_algebra(g, config.anticlique_cap).vertex_family);
    EmbeddedFamily L = embedded_product_family(families);
    r["atoms"] = L.product.algebra.atom_count();
    auto size = L.product.algebra.size();
    r["size"] = size ? Json(*size) : Json(nullptr);
    r["family_size"] = L.family.size();
    auto rep = independence_report(L.family, config.member_budget);
    r["family"] = independence_json(rep);
  } else if (config.compose_op == "free") {
    auto graphs = parse_graph_inputs(config);
    if (graphs.size() < 2) throw PreconditionError("free needs at least two graphs");
    std::vector<SetAlgebra> algebras;
    for (const auto& g : graphs)
      algebras.push_back(anticlique_algebra(g, config.anticlique_cap).algebra);
    FreeProduct fp = free_product(algebras);
    r["atoms"] = fp.algebra.atom_count();
    auto size = fp.algebra.size();
    r["size"] = size ? Json(*size) : Json(nullptr);
    StructureAlgebra bu = anticlique_algebra(disjoint_union(graphs), config.anticlique_cap);
    bool identity = bu.algebra.atom_count() == fp.algebra.atom_count();
    r["matches_disjoint_union"] = identity;
    if (!identity) exit_code = 1;
  } else if (config.compose_op == "amalgam") {
    auto graphs = parse_graph_inputs(config);
    if (graphs.size() < 2) throw PreconditionError("amalgam needs at least two graphs");
    if (config.shared_path.empty()) throw PreconditionError("amalgam needs --shared");
    Graph shared = parse_graph_file(config.shared_path);
    SharedEmbedding se{shared, {}};
    se.into_factor.assign(graphs.size(), {});
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      // Default embedding: shared vertex k maps to factor vertex k.
      se.into_factor[i].resize(shared.vertex_count());
      for (int k = 0; k < shared.vertex_count(); ++k) se.into_factor[i][k] = k;
    }
    for (const auto& embedding : config.embeddings) {
      auto colon = embedding.find(':');
      if (colon == std::string::npos)
        throw PreconditionError("embedding must look like FACTOR:v1,v2,...");
      std::size_t factor = std::stoul(embedding.substr(0, colon));
      if (factor >= graphs.size()) throw PreconditionError("embedding factor out of range");
      std::vector<int> map;
      std::istringstream items(embedding.substr(colon + 1));
      std::string item;
      while (std::getline(items, item, ',')) map.push_back(std::stoi(item) - 1);
      se.into_factor[factor] = std::move(map);
    }
    auto afp = amalgamated_free_product_via_graphs(graphs, se, config.anticlique_cap, 16,
                                                   config.seed);
    r["glued_vertices"] = afp.glued.graph.vertex_count();
    r["atoms"] = afp.algebra.atom_count();
    r["family_size"] = afp.family.size();
    auto rep = independence_report(afp.family, config.member_budget);
    r["family"] = independence_json(rep);
  } else {
    throw PreconditionError("unknown compose op '" + config.compose_op + "'");
  }
  return {exit_code, report.dump(2) + "\n"};
}

RunResult run_invariants(const RunConfig& config) {
  Structure s = require_input(config);
  StructureAlgebra sa = structure_algebra(s, config);
  std::vector<Degree> degrees = {Degree::finite(2), Degree::omega()};
  if (config.n) degrees.insert(degrees.begin(), *config.n);
  InvariantReport inv = invariant_report(sa.vertex_family, degrees, config.atom_budget);

  Json report = base_report(config);
  Json& r = report["results"];
  r["atoms"] = inv.atom_count;
  r["max_pairwise_disjoint"] = {{"size", inv.max_pairwise_disjoint.size},
                                {"witness", index_list(inv.max_pairwise_disjoint.witness)}};
  r["max_independent_subfamily"] = {{"size", inv.max_independent.size},
                                    {"witness", index_list(inv.max_independent.witness)}};
  r["n_ind"] = Json::object();
  for (const auto& [label, value] : inv.n_ind)
    r["n_ind"][label] = value < 0 ? Json(nullptr) : Json(value);
  if (!inv.notes.empty()) r["notes"] = inv.notes;

  if (sa.algebra.atom_count() <= config.atom_budget) {
    auto ii = maximal_ideal_independent_check(sa.algebra, config.atom_budget);
    r["maximal_ideal_independent"] = {{"count", ii.family_count},
                                      {"min_size", ii.min_size},
                                      {"all_join_one", ii.all_join_one}};
  }
  return {0, report.dump(2) + "\n"};
}

RunResult run_topology(const RunConfig& config) {
  Structure s = require_input(config);
  SubbaseFamily subbase;
  int edge_bound = 2;
  if (const Graph* g = std::get_if<Graph>(&s)) {
    subbase = canonical_subbase(*g, config.anticlique_cap);
  } else if (const Hypergraph* h = std::get_if<Hypergraph>(&s)) {
    subbase = canonical_subbase(*h, config.anticlique_cap);
    for (const auto& e : h->edge_lists()) edge_bound = std::max(edge_bound, (int)e.size());
  } else {
    throw PreconditionError("topology commands expect a graph or hypergraph");
  }

  Json report = base_report(config);
  Json& r = report["results"];
  r["points"] = subbase.point_count;
  r["subbase_sets"] = static_cast<int>(subbase.sets.size());
  if (config.nary) {
    auto res = is_n_ary(subbase, *config.nary);
    r["n"] = *config.nary;
    r["nary"] = res.is_nary;
    if (!res.is_nary) {
      Json ce = Json::array();
      for (int i : res.counterexample) ce.push_back(subbase.labels[i]);
      r["counterexample"] = ce;
    }
  }
  if (config.cmpn || !config.nary) {
    int value = 2;
    if (const Graph* g = std::get_if<Graph>(&s))
      value = cmpn_upper(*g, config.anticlique_cap);
    else
      value = cmpn_upper(std::get<Hypergraph>(s), config.anticlique_cap);
    r["cmpn_upper"] = value;
    r["edge_bound"] = edge_bound;
  }
  return {0, report.dump(2) + "\n"};
}

RunResult run_verify(const RunConfig& config) {
  CheckScale scale;
  scale.seed = config.seed;
  auto results = run_theorem_checks(scale);
  for (const auto& path : config.inputs)
    results.push_back(check_structure(parse_structure_file(path), path, config.anticlique_cap));

  Json report = base_report(config);
  Json& r = report["results"];
  r["checks"] = Json::array();
  int failed = 0;
  for (const auto& c : results) {
    r["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) ++failed;
  }
  r["total"] = static_cast<int>(results.size());
  r["failed"] = failed;
  return {failed == 0 ? 0 : 1, report.dump(2) + "\n"};
}

}  // namespace

RunResult run(const RunConfig& config) {
  if (config.command == "anticliques") return run_anticliques(config);
  if (config.command == "algebra") return run_algebra(config);
  if (config.command == "independence") return run_independence(config);
  if (config.command == "perp") return run_perp(config);
  if (config.command == "roundtrip") return run_roundtrip(config);
  if (config.command == "extend") return run_extend(config);
  if (config.command == "compose") return run_compose(config);
  if (config.command == "invariants") return run_invariants(config);
  if (config.command == "topology") return run_topology(config);
  if (config.command == "verify") return run_verify(config);
  throw PreconditionError("unknown command '" + config.command + "'");
}

std::optional<std::uint64_t> budget_override_from_env() {
  const char* raw = std::getenv("FREEBOOLE_BUDGET_DEFAULT");
  if (!raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace freeboole
