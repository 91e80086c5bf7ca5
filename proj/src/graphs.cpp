#include "freeboole/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace freeboole {

namespace {

void check_vertex_budget(int n) {
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  if (n > kMaxVertices)
    throw BudgetError("vertex count " + std::to_string(n) + " exceeds the limit of " +
                      std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  check_vertex_budget(n);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DimensionError("vertex " + std::to_string(v) + " outside graph of size " +
                         std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loop edges are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t row = adj_[u] >> (u + 1) << (u + 1);
    while (row) {
      out.emplace_back(u, std::countr_zero(row));
      row &= row - 1;
    }
  }
  return out;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n) {
  check_vertex_budget(n);
  std::vector<std::uint64_t> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    std::uint64_t m = 0;
    for (int v : e) {
      if (v < 0 || v >= n) throw DimensionError("hyperedge vertex out of range");
      m |= std::uint64_t{1} << v;
    }
    masks.push_back(m);
  }
  *this = Hypergraph(n, std::move(masks));
}

Hypergraph::Hypergraph(int n, std::vector<std::uint64_t> edge_masks)
    : n_(n), edges_(std::move(edge_masks)) {
  check_vertex_budget(n);
  for (auto m : edges_) {
    if (n < 64 && (m >> n) != 0) throw DimensionError("hyperedge vertex out of range");
    if (std::popcount(m) < 2)
      throw PreconditionError("hyperedges must have at least two vertices");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::uint64_t> masks;
  for (auto [u, v] : g.edges())
    masks.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  return Hypergraph(g.vertex_count(), std::move(masks));
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (auto m : edges_) {
    std::vector<int> e;
    std::uint64_t w = m;
    while (w) {
      e.push_back(std::countr_zero(w));
      w &= w - 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool Hypergraph::normalized() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && (edges_[i] & edges_[j]) == edges_[i]) return false;
  return true;
}

Hypergraph Hypergraph::normalize() const {
  std::vector<std::uint64_t> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && (edges_[j] & edges_[i]) == edges_[j] && edges_[j] != edges_[i]) {
        minimal = false;
        break;
      }
    if (minimal) kept.push_back(edges_[i]);
  }
  return Hypergraph(n_, std::move(kept));
}

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), above_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  check_vertex_budget(n);
  for (auto [u, v] : relations) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw DimensionError("poset element out of range");
    above_[u] |= std::uint64_t{1} << v;
  }
  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u)
      if ((above_[u] >> k) & 1) above_[u] |= above_[k];
  for (int u = 0; u < n; ++u)
    if ((above_[u] >> u) & 1)
      throw PreconditionError("order relation has a cycle through element " + std::to_string(u));
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset(n, rel);
}

Poset Poset::antichain(int n) { return Poset(n, {}); }

bool Poset::less(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DimensionError("poset element out of range");
  return (above_[u] >> v) & 1;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

// Backtracking over vertices in index order; a vertex joins the current set
// only if that keeps it edge-free.  Results are sorted by bit pattern.
template <typename CanAdd>
AnticliqueIndex enumerate_edge_free(int n, std::uint64_t cap, CanAdd can_add) {
  AnticliqueIndex out;
  out.vertex_count = n;
  std::vector<std::pair<std::uint64_t, int>> stack;  // (current set, next vertex)
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [cur, v] = stack.back();
    stack.pop_back();
    if (v == n) {
      if (out.sets.size() >= cap)
        throw BudgetError("anticlique count exceeds the cap of " + std::to_string(cap));
      out.sets.push_back(cur);
      continue;
    }
    if (can_add(cur, v)) stack.emplace_back(cur | (std::uint64_t{1} << v), v + 1);
    stack.emplace_back(cur, v + 1);
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

}  // namespace

AnticliqueIndex enumerate_anticliques(const Graph& g, std::uint64_t cap) {
  return enumerate_edge_free(g.vertex_count(), cap, [&](std::uint64_t cur, int v) {
    return (g.neighbors(v) & cur) == 0;
  });
}

AnticliqueIndex enumerate_anticliques(const Hypergraph& h, std::uint64_t cap) {
  const auto& edges = h.edge_masks();
  return enumerate_edge_free(h.vertex_count(), cap, [&](std::uint64_t cur, int v) {
    std::uint64_t next = cur | (std::uint64_t{1} << v);
    for (auto e : edges)
      if ((e & next) == e) return false;
    return true;
  });
}

AnticliqueIndex enumerate_cliques(const Graph& g, std::uint64_t cap) {
  return enumerate_anticliques(complement(g), cap);
}

Graph disjoint_union(const std::vector<Graph>& gs) {
  int total = 0;
  for (const auto& g : gs) total += g.vertex_count();
  Graph out(total);
  int offset = 0;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) out.add_edge(u + offset, v + offset);
    offset += g.vertex_count();
  }
  return out;
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& hs) {
  int total = 0;
  for (const auto& h : hs) total += h.vertex_count();
  check_vertex_budget(total);
  std::vector<std::uint64_t> masks;
  int offset = 0;
  for (const auto& h : hs) {
    for (auto e : h.edge_masks()) masks.push_back(e << offset);
    offset += h.vertex_count();
  }
  return Hypergraph(total, std::move(masks));
}

Graph join(const std::vector<Graph>& gs) {
  Graph out = disjoint_union(gs);
  int offset = 0;
  for (const auto& g : gs) {
    for (int u = 0; u < offset; ++u)
      for (int v = 0; v < g.vertex_count(); ++v) out.add_edge(u, offset + v);
    offset += g.vertex_count();
  }
  return out;
}

AmalgamatedUnion amalgamated_union(const std::vector<Graph>& gs, const SharedEmbedding& shared) {
  const int s = shared.shared.vertex_count();
  if (shared.into_factor.size() != gs.size())
    throw PreconditionError("one shared embedding per factor required");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto& emb = shared.into_factor[i];
    if (static_cast<int>(emb.size()) != s)
      throw PreconditionError("embedding must map every shared vertex");
    std::vector<int> seen;
    for (int img : emb) {
      if (img < 0 || img >= gs[i].vertex_count())
        throw PreconditionError("embedding image out of range in factor " + std::to_string(i));
      seen.push_back(img);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw PreconditionError("embedding must be injective in factor " + std::to_string(i));
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v)
        if (shared.shared.has_edge(u, v) != gs[i].has_edge(emb[u], emb[v]))
          throw PreconditionError("shared graph is not induced in factor " + std::to_string(i));
  }

  // Layout: shared vertices first, then each factor's remaining vertices in
  // ascending order.
  AmalgamatedUnion out{Graph(0), {}, s};
  std::vector<std::vector<int>> maps(gs.size());
  int next = s;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    maps[i].assign(gs[i].vertex_count(), -1);
    for (int u = 0; u < s; ++u) maps[i][shared.into_factor[i][u]] = u;
    for (int v = 0; v < gs[i].vertex_count(); ++v)
      if (maps[i][v] < 0) maps[i][v] = next++;
  }
  Graph glued(next);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (auto [u, v] : gs[i].edges()) glued.add_edge(maps[i][u], maps[i][v]);
  out.graph = std::move(glued);
  out.factor_vertex_map = std::move(maps);
  return out;
}

bool is_graph_homomorphism(const std::vector<int>& f, const Graph& src, const Graph& dst) {
  if (f.size() != static_cast<std::size_t>(src.vertex_count()))
    throw PreconditionError("vertex map must be total on the source");
  for (int img : f)
    if (img < 0 || img >= dst.vertex_count())
      throw DimensionError("vertex map image out of range");
  for (auto [u, v] : src.edges()) {
    if (f[u] == f[v]) return false;  // loopless target
    if (!dst.has_edge(f[u], f[v])) return false;
  }
  return true;
}

bool is_hypergraph_homomorphism(const std::vector<int>& f, const Hypergraph& src,
                                const Hypergraph& dst) {
  if (f.size() != static_cast<std::size_t>(src.vertex_count()))
    throw PreconditionError("vertex map must be total on the source");
  for (int img : f)
    if (img < 0 || img >= dst.vertex_count())
      throw DimensionError("vertex map image out of range");
  const auto& dst_edges = dst.edge_masks();
  for (auto e : src.edge_masks()) {
    std::uint64_t img = 0;
    std::uint64_t w = e;
    while (w) {
      img |= std::uint64_t{1} << f[std::countr_zero(w)];
      w &= w - 1;
    }
    if (!std::binary_search(dst_edges.begin(), dst_edges.end(), img)) return false;
  }
  return true;
}

Graph comparability_graph(const Poset& p) {
  const int n = p.element_count();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (p.comparable(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

void check_iso_budget(int n, int limit) {
  if (n > limit)
    throw BudgetError("isomorphism search limited to " + std::to_string(limit) + " vertices");
}

// Permutation backtracking shared by the graph and hypergraph cases.  next(v)
// proposes candidate images, accept(perm, v, img) validates the extension.
template <typename Compatible>
bool find_isomorphism(int n, Compatible compatible) {
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  // clang-format off
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    for (int img = 0; img < n; ++img) {
      if (used[img] || !compatible(perm, v, img)) continue;
      perm[v] = img; used[img] = true;
      if (self(self, depth + 1)) return true;
      perm[v] = -1; used[img] = false;
    }
    return false;
  };
  // clang-format on
  return search(search, 0);
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b, int limit) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  check_iso_budget(n, limit);

  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) da[v] = std::popcount(a.neighbors(v));
  for (int v = 0; v < n; ++v) db[v] = std::popcount(b.neighbors(v));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  return find_isomorphism(n, [&](const std::vector<int>& perm, int v, int img) {
    if (da[v] != db[img]) return false;
    for (int u = 0; u < n; ++u)
      if (perm[u] >= 0 && a.has_edge(u, v) != b.has_edge(perm[u], img)) return false;
    return true;
  });
}

bool graphs_isomorphic(const Hypergraph& a, const Hypergraph& b, int limit) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const int n = a.vertex_count();
  check_iso_budget(n, limit);
  const auto& ea = a.edge_masks();
  const auto& eb = b.edge_masks();
  if (ea.size() != eb.size()) return false;
  {
    auto sizes = [](const std::vector<std::uint64_t>& es) {
      std::vector<int> s;
      for (auto e : es) s.push_back(std::popcount(e));
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes(ea) != sizes(eb)) return false;
  }

  // Degree = multiset of sizes of incident edges.
  auto profile = [n](const std::vector<std::uint64_t>& es) {
    std::vector<std::vector<int>> prof(n);
    for (auto e : es)
      for (int v = 0; v < n; ++v)
        if ((e >> v) & 1) prof[v].push_back(std::popcount(e));
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
  };
  auto pa = profile(ea), pb = profile(eb);

  return find_isomorphism(n, [&](const std::vector<int>& perm, int v, int img) {
    if (pa[v] != pb[img]) return false;
    // Full-image edges must match once all vertices of an edge are mapped.
    std::vector<int> p = perm;
    p[v] = img;
    for (auto e : ea) {
      std::uint64_t mapped = 0;
      bool complete = true;
      std::uint64_t w = e;
      while (w) {
        int u = std::countr_zero(w);
        w &= w - 1;
        if (p[u] < 0) {
          complete = false;
          break;
        }
        mapped |= std::uint64_t{1} << p[u];
      }
      if (complete && !std::binary_search(eb.begin(), eb.end(), mapped)) return false;
    }
    return true;
  });
}

}  // namespace freeboole
