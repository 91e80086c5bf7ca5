#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "freeboole/errors.hpp"

namespace freeboole {

inline constexpr std::uint64_t kDefaultAnticliqueCap = 1'000'000;
inline constexpr int kDefaultIsomorphismLimit = 10;
inline constexpr int kMaxVertices = 63;

/// Loopless undirected graph on vertices [0, n), adjacency kept as bit rows.
class Graph {
public:
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph edgeless(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::uint64_t neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

  bool operator==(const Graph&) const = default;

private:
  int n_;
  std::vector<std::uint64_t> adj_;
  void check_vertex(int v) const;
};

/// Loopless hypergraph: every edge has at least two vertices.  Edges are kept
/// as sorted, deduplicated vertex masks.
class Hypergraph {
public:
  Hypergraph(int n, std::vector<std::vector<int>> edges);
  Hypergraph(int n, std::vector<std::uint64_t> edge_masks);

  static Hypergraph from_graph(const Graph& g);

  int vertex_count() const { return n_; }
  const std::vector<std::uint64_t>& edge_masks() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::vector<std::vector<int>> edge_lists() const;

  // No edge contains another.
  bool normalized() const;
  // Drops edges that contain another edge.  Anticliques are unchanged.
  Hypergraph normalize() const;

  bool operator==(const Hypergraph&) const = default;

private:
  int n_;
  std::vector<std::uint64_t> edges_;
};

/// Strict partial order on [0, n); the relation is closed transitively at
/// construction and must be irreflexive (acyclic input).
class Poset {
public:
  Poset(int n, const std::vector<std::pair<int, int>>& relations);

  static Poset chain(int n);
  static Poset antichain(int n);

  int element_count() const { return n_; }
  bool less(int u, int v) const;
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }

private:
  int n_;
  std::vector<std::uint64_t> above_;  // above_[u] = {v : u < v}
};

/// The anticliques of a graph or hypergraph, listed by ascending bit pattern.
/// These are the ground points of the derived algebra.
struct AnticliqueIndex {
  int vertex_count = 0;
  std::vector<std::uint64_t> sets;

  int count() const { return static_cast<int>(sets.size()); }
};

Graph complement(const Graph& g);

AnticliqueIndex enumerate_anticliques(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);
AnticliqueIndex enumerate_anticliques(const Hypergraph& h,
                                      std::uint64_t cap = kDefaultAnticliqueCap);
AnticliqueIndex enumerate_cliques(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);

Graph disjoint_union(const std::vector<Graph>& gs);
Hypergraph disjoint_union(const std::vector<Hypergraph>& hs);
Graph join(const std::vector<Graph>& gs);

/// A common graph together with one induced embedding into each factor.
struct SharedEmbedding {
  Graph shared;
  std::vector<std::vector<int>> into_factor;  // one vertex map per factor
};

/// Gluing of the factors along the shared graph: vertices identified through
/// the embeddings, two vertices adjacent iff adjacent in some factor.
/// Returns the glued graph plus the factor-to-glued vertex maps.
struct AmalgamatedUnion {
  Graph graph;
  std::vector<std::vector<int>> factor_vertex_map;
  int shared_count = 0;  // glued vertices [0, shared_count) are the shared ones
};
AmalgamatedUnion amalgamated_union(const std::vector<Graph>& gs, const SharedEmbedding& shared);

bool is_graph_homomorphism(const std::vector<int>& f, const Graph& src, const Graph& dst);
bool is_hypergraph_homomorphism(const std::vector<int>& f, const Hypergraph& src,
                                const Hypergraph& dst);

Graph comparability_graph(const Poset& p);

/// Exact isomorphism by backtracking with degree-sequence pruning; vertex
/// counts beyond the limit raise BudgetError.
bool graphs_isomorphic(const Graph& a, const Graph& b, int limit = kDefaultIsomorphismLimit);
bool graphs_isomorphic(const Hypergraph& a, const Hypergraph& b,
                       int limit = kDefaultIsomorphismLimit);

}  // namespace freeboole
