#include <doctest.h>

#include "freeboole/checks.hpp"
#include "freeboole/graphs.hpp"
#include "oracles.hpp"

using namespace freeboole;

TEST_CASE("graph construction and complement") {
  CHECK(complement(Graph::complete(4)) == Graph::edgeless(4));
  CHECK(complement(complement(Graph::path(4))) == Graph::path(4));
  Graph cp3 = complement(Graph::path(3));
  CHECK(cp3.edge_count() == 1);
  CHECK(cp3.has_edge(0, 2));
  CHECK_THROWS_AS(Graph(3).add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(Graph(64), BudgetError);
}

TEST_CASE("anticlique enumeration") {
  CHECK(enumerate_anticliques(Graph::complete(4)).count() == 5);
  CHECK(enumerate_anticliques(Graph::edgeless(5)).count() == 32);
  auto p3 = enumerate_anticliques(Graph::path(3));
  CHECK(p3.sets == std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b100, 0b101});

  SUBCASE("matches the filtering oracle on every 5-vertex graph") {
    for (const auto& g : all_graphs(5)) {
      std::vector<std::uint64_t> edges;
      for (auto [u, v] : g.edges())
        edges.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      CHECK(enumerate_anticliques(g).sets == oracles::naive_anticliques(5, edges));
    }
  }
  SUBCASE("cap raises a budget error") {
    CHECK_THROWS_AS(enumerate_anticliques(Graph::edgeless(5), 10), BudgetError);
  }
}

TEST_CASE("clique enumeration") {
  Graph one_edge(3);
  one_edge.add_edge(0, 1);
  CHECK(enumerate_cliques(one_edge).count() == 5);
  CHECK(enumerate_cliques(Graph::complete(3)).count() == 8);
  CHECK(enumerate_cliques(Graph::edgeless(4)).count() == 5);
}

TEST_CASE("hypergraphs") {
  Hypergraph h(4, std::vector<std::vector<int>>{{0, 1, 2}, {0, 1}});
  CHECK(h.edge_count() == 2);
  CHECK(!h.normalized());
  CHECK(h.normalize().edge_masks() == std::vector<std::uint64_t>{0b0011});
  SUBCASE("normalization never changes the anticliques") {
    for (const auto& hg : all_hypergraphs(4, 4))
      CHECK(enumerate_anticliques(hg).sets == enumerate_anticliques(hg.normalize()).sets);
  }
  CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{1}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{}}), PreconditionError);
  CHECK(Hypergraph::from_graph(Graph::path(3)).edge_masks() ==
        std::vector<std::uint64_t>{0b011, 0b110});
}

TEST_CASE("disjoint union and join") {
  Graph two_k4 = disjoint_union({Graph::complete(4), Graph::complete(4)});
  CHECK(two_k4.vertex_count() == 8);
  CHECK(two_k4.edge_count() == 12);
  CHECK(enumerate_anticliques(two_k4).count() == 25);
  CHECK(disjoint_union({Graph::path(3), Graph(0)}) == Graph::path(3));

  CHECK(join({Graph::edgeless(1), Graph::edgeless(1)}) == Graph::complete(2));
  CHECK(join({Graph::complete(2), Graph::complete(2)}) == Graph::complete(4));
  CHECK(enumerate_anticliques(join({Graph::path(3), Graph::path(3)})).count() == 9);
}

TEST_CASE("amalgamated union") {
  SUBCASE("empty shared graph is the disjoint union") {
    SharedEmbedding none{Graph(0), {{}, {}}};
    auto au = amalgamated_union({Graph::path(3), Graph::complete(2)}, none);
    CHECK(au.graph == disjoint_union({Graph::path(3), Graph::complete(2)}));
  }
  SUBCASE("a graph amalgamated with itself over all of itself") {
    std::vector<int> ident = {0, 1, 2};
    SharedEmbedding all{Graph::path(3), {ident, ident}};
    auto au = amalgamated_union({Graph::path(3), Graph::path(3)}, all);
    CHECK(au.graph == Graph::path(3));
  }
  SUBCASE("two K5 sharing an edge") {
    SharedEmbedding se{Graph::complete(2), {{0, 1}, {3, 4}}};
    auto au = amalgamated_union({Graph::complete(5), Graph::complete(5)}, se);
    CHECK(au.graph.vertex_count() == 8);
    CHECK(au.graph.edge_count() < Graph::complete(8).edge_count());
  }
  SUBCASE("non-induced embeddings are rejected") {
    SharedEmbedding bad{Graph::edgeless(2), {{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(amalgamated_union({Graph::complete(2), Graph::complete(2)}, bad),
                    PreconditionError);
  }
}

TEST_CASE("graph and hypergraph homomorphisms") {
  Graph k2 = Graph::complete(2);
  CHECK(is_graph_homomorphism({0, 1}, k2, k2));
  CHECK(is_graph_homomorphism({1, 0}, k2, k2));
  CHECK(!is_graph_homomorphism({0, 0}, k2, k2));  // loopless target
  Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(is_hypergraph_homomorphism({0, 1, 2}, tri, tri));
  CHECK(!is_hypergraph_homomorphism({0, 0, 1}, tri, tri));
  CHECK_THROWS_AS(is_graph_homomorphism({0}, k2, k2), PreconditionError);
}

TEST_CASE("posets and comparability graphs") {
  CHECK(comparability_graph(Poset::chain(3)) == Graph::complete(3));
  CHECK(comparability_graph(Poset::antichain(3)) == Graph::edgeless(3));
  Poset n_order(4, {{0, 2}, {1, 2}, {1, 3}});
  Graph cg = comparability_graph(n_order);
  CHECK(cg.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}});
  SUBCASE("transitive closure is applied") {
    Poset chain(3, {{0, 1}, {1, 2}});
    CHECK(chain.less(0, 2));
  }
  SUBCASE("cycles are rejected") {
    CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), PreconditionError);
  }
}

TEST_CASE("isomorphism") {
  CHECK(graphs_isomorphic(Graph::path(3), Graph::path(3)));
  Graph relabeled(3);
  relabeled.add_edge(2, 1);
  relabeled.add_edge(1, 0);
  CHECK(graphs_isomorphic(Graph::path(3), relabeled));
  CHECK(!graphs_isomorphic(Graph::complete(4),
                           disjoint_union({Graph::path(3), Graph::edgeless(1)})));
  CHECK_THROWS_AS(graphs_isomorphic(Graph::edgeless(12), Graph::edgeless(12)), BudgetError);

  Hypergraph a(4, std::vector<std::vector<int>>{{0, 1, 2}});
  Hypergraph b(4, std::vector<std::vector<int>>{{1, 2, 3}});
  Hypergraph c(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(graphs_isomorphic(a, b));
  CHECK(!graphs_isomorphic(a, c));
}
