#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "freeboole/graphs.hpp"

namespace freeboole {

/// Line formats, 1-based vertex ids:
///   p edge n m   then  e u v        (graph)
///   p hyper n m  then  h v1 ... vk  (hypergraph)
///   p order n m  then  r u v        (strict order u < v, closed transitively)
/// Lines starting with c are comments.  Duplicate edges are dropped.
Graph parse_graph(std::istream& in, const std::string& name = "<stream>");
Hypergraph parse_hypergraph(std::istream& in, const std::string& name = "<stream>");
Poset parse_poset(std::istream& in, const std::string& name = "<stream>");

Graph parse_graph_file(const std::string& path);
Hypergraph parse_hypergraph_file(const std::string& path);
Poset parse_poset_file(const std::string& path);

using Structure = std::variant<Graph, Hypergraph, Poset>;

/// Dispatches on the header line.
Structure parse_structure(std::istream& in, const std::string& name = "<stream>");
Structure parse_structure_file(const std::string& path);

std::string write_graph(const Graph& g);
std::string write_hypergraph(const Hypergraph& h);

/// FNV-1a over the file bytes, as fixed-width hex; used in reports.
std::string file_digest(const std::string& path);

}  // namespace freeboole
