#include <doctest.h>

#include <random>
#include <set>

#include "freeboole/checks.hpp"
#include "freeboole/free_construct.hpp"
#include "oracles.hpp"

using namespace freeboole;

TEST_CASE("anticlique and clique algebras") {
  StructureAlgebra k2 = anticlique_algebra(Graph::complete(2));
  CHECK(k2.index.count() == 3);
  CHECK(k2.algebra.atom_count() == 3);  // the vertex family pins every point
  CHECK(k2.vertex_family.members()[0].count() == 1);
  CHECK(k2.vertex_family.members()[1].count() == 1);

  StructureAlgebra single = anticlique_algebra(Graph::edgeless(1));
  CHECK(single.algebra.size() == std::uint64_t{4});
  CHECK(single.algebra.contains(single.vertex_family.members()[0]));

  CHECK(clique_algebra(Graph::edgeless(4)).algebra.size() == std::uint64_t{32});
  CHECK(clique_algebra(Graph::complete(3)).algebra.atom_count() == 8);  // full powerset
  Graph one_edge(3);
  one_edge.add_edge(0, 1);
  CHECK(clique_algebra(one_edge).algebra.atom_count() ==
        anticlique_algebra(complement(one_edge)).algebra.atom_count());
}

TEST_CASE("independence reports") {
  SUBCASE("single 3-edge: degree exactly three") {
    auto sa = anticlique_algebra(Hypergraph(3, std::vector<std::vector<int>>{{0, 1, 2}}));
    auto rep = independence_report(sa.vertex_family);
    CHECK(rep.omega_independent);
    CHECK(*rep.degree == Degree::finite(3));
    CHECK(oracles::naive_n_independent(sa.vertex_family.members(), 3));
    CHECK(!oracles::naive_n_independent(sa.vertex_family.members(), 2));
  }
  SUBCASE("graph vertex families stay at degree two") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
      Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 4));
      auto rep = independence_report(anticlique_algebra(g).vertex_family);
      CHECK(rep.omega_independent);
      CHECK(*rep.degree <= Degree::finite(2));
    }
  }
  SUBCASE("atoms of a powerset fail the join condition") {
    SetAlgebra p3 = powerset(3);
    auto rep = independence_report(GeneratorFamily(p3, p3.atoms()));
    CHECK(!rep.omega_independent);
    CHECK(!rep.degree.has_value());
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().kind == IndependenceViolation::Kind::sum_is_one);
  }
  SUBCASE("pairwise disjoint families with a small sum have degree two") {
    SetAlgebra p4 = powerset(4);
    GeneratorFamily fam(p4, {Element::of(4, {0}), Element::of(4, {1}), Element::of(4, {2})});
    auto rep = independence_report(fam);
    CHECK(rep.omega_independent);
    CHECK(*rep.degree == Degree::finite(2));
    CHECK(oracles::naive_n_independent(fam.members(), 2));
  }
  SUBCASE("budget guard") {
    SetAlgebra p2 = powerset(2);
    GeneratorFamily fam(p2, {Element::of(2, {0}), Element::of(2, {1})});
    CHECK_THROWS_AS(independence_report(fam, 1), BudgetError);
  }
}

TEST_CASE("minimal zero sets") {
  SUBCASE("independent families have none") {
    SetAlgebra p4 = powerset(4);
    GeneratorFamily fam(p4, {Element::of(4, {0, 1}), Element::of(4, {0, 2})});
    CHECK(minimal_zero_sets(fam).empty());
  }
  SUBCASE("disjoint atoms give the pair") {
    SetAlgebra p2 = powerset(2);
    GeneratorFamily fam(p2, {Element::of(2, {0}), Element::of(2, {1})});
    CHECK(minimal_zero_sets(fam) == std::vector<std::vector<int>>{{0, 1}});
  }
  SUBCASE("vertex families recover the edges, against the oracle") {
    for (const auto& g : all_graphs(4)) {
      auto sa = anticlique_algebra(g);
      auto mine = minimal_zero_sets(sa.vertex_family);
      auto naive = oracles::naive_minimal_zero_sets(sa.vertex_family.members());
      std::vector<std::uint64_t> mine_masks;
      for (const auto& z : mine) {
        std::uint64_t m = 0;
        for (int i : z) m |= std::uint64_t{1} << i;
        mine_masks.push_back(m);
      }
      std::sort(mine_masks.begin(), mine_masks.end());
      std::sort(naive.begin(), naive.end());
      CHECK(mine_masks == naive);
      std::vector<std::uint64_t> edges;
      for (auto [u, v] : g.edges())
        edges.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      std::sort(edges.begin(), edges.end());
      CHECK(mine_masks == edges);
    }
  }
}

TEST_CASE("perp hypergraph") {
  auto sa = anticlique_algebra(Graph::path(3));
  auto perp = perp_hypergraph(sa.vertex_family);
  CHECK(perp.hypergraph.edge_masks() == std::vector<std::uint64_t>{0b011, 0b110});
  auto indep = anticlique_algebra(Graph::edgeless(3));
  CHECK(perp_hypergraph(indep.vertex_family).hypergraph.edge_count() == 0);
  auto k3 = anticlique_algebra(Hypergraph(3, std::vector<std::vector<int>>{{0, 1, 2}}));
  CHECK(perp_hypergraph(k3.vertex_family).hypergraph.edge_masks() ==
        std::vector<std::uint64_t>{0b111});
}

TEST_CASE("round trips") {
  CHECK(roundtrip_check(Graph::edgeless(4)));
  CHECK(roundtrip_check(Graph::path(4)));
  CHECK(roundtrip_check(Hypergraph(4, std::vector<std::vector<int>>{{0, 1, 2}})));
  CHECK_THROWS_AS(
      roundtrip_check(Hypergraph(4, std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}})),
      PreconditionError);
}

TEST_CASE("extension of n-preserving maps") {
  auto sa = anticlique_algebra(Graph::path(3));
  SetAlgebra target = powerset(2);
  SUBCASE("zero map extends") {
    std::vector<Element> zeros(3, Element(2));
    Homomorphism h = extend_n_preserving(sa.vertex_family, target, zeros, Degree::finite(2));
    CHECK(h.apply(sa.vertex_family.members()[0]) == Element(2));
  }
  SUBCASE("overlapping images on an edge are rejected") {
    std::vector<Element> bad = {Element::of(2, {0}), Element::of(2, {0}), Element(2)};
    CHECK_THROWS_AS(extend_n_preserving(sa.vertex_family, target, bad, Degree::finite(2)),
                    PreconditionError);
  }
  SUBCASE("non-generating families are rejected") {
    GeneratorFamily partial(sa.algebra, {sa.vertex_family.members()[0]});
    CHECK_THROWS_AS(
        extend_n_preserving(partial, target, {Element::of(2, {0})}, Degree::finite(2)),
        PreconditionError);
  }
}

TEST_CASE("freeness degree search") {
  CHECK(freeness_degree_of_algebra(powerset(2)) == Degree::finite(1));
  CHECK(freeness_degree_of_algebra(powerset(3)) == Degree::finite(2));
  CHECK_THROWS_AS(freeness_degree_of_algebra(powerset(7)), BudgetError);
  auto p7 = freeness_degree_of_algebra(powerset(7), DegreeSearchBudget{128, 50'000'000});
  REQUIRE(p7.has_value());
  CHECK(*p7 <= Degree::finite(3));
  SUBCASE("tiny subset budgets surface as budget errors") {
    CHECK_THROWS_AS(freeness_degree_of_algebra(powerset(3), DegreeSearchBudget{64, 2}),
                    BudgetError);
  }
}

TEST_CASE("semigroup closures and disjunctivity") {
  SetAlgebra p4 = powerset(4);
  SUBCASE("pairwise disjoint families only gain the bounds") {
    GeneratorFamily fam(p4, {Element::of(4, {0}), Element::of(4, {1})});
    auto closed = semigroup_closure(fam);
    CHECK(closed.size() == 4);  // members, 0, 1
  }
  SUBCASE("an independent pair gains its meet") {
    GeneratorFamily fam(p4, {Element::of(4, {0, 1}), Element::of(4, {0, 2})});
    auto closed = semigroup_closure(fam);
    CHECK(closed.size() == 5);
    CHECK(std::find(closed.begin(), closed.end(), Element::of(4, {0})) != closed.end());
  }
  SUBCASE("path vertex family gains the endpoint meet") {
    auto sa = anticlique_algebra(Graph::path(3));
    auto closed = semigroup_closure(sa.vertex_family);
    CHECK(closed.size() == 6);  // a+, b+, c+, a+c+, 0, 1
  }
  SUBCASE("size budget") {
    std::vector<Element> ind;
    for (int b = 0; b < 3; ++b) {
      Element e(8);
      for (int p = 0; p < 8; ++p)
        if ((p >> b) & 1) e.set(p);
      ind.push_back(e);
    }
    GeneratorFamily fam(powerset(8), ind);
    CHECK_THROWS_AS(semigroup_closure(fam, 3), BudgetError);
  }
  SUBCASE("disjunctive check against the dual-search oracle") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 120; ++round) {
      std::set<Element> members;
      int want = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < want; ++i) {
        Element e = Element::from_mask(3, rng() & 7);
        if (!e.empty()) members.insert(e);
      }
      if (members.empty()) continue;
      std::vector<Element> h(members.begin(), members.end());
      CHECK(is_disjunctive(h) == oracles::naive_is_disjunctive(h));
    }
  }
  SUBCASE("single elements are disjunctive") {
    CHECK(is_disjunctive({Element::of(3, {1, 2})}));
  }
}

TEST_CASE("poset-induced homomorphisms") {
  auto ident = poset_morphism_hom({0, 1, 2}, Poset::chain(3), Poset::chain(3));
  REQUIRE(ident.has_value());
  for (const auto& atom : ident->source().atoms()) CHECK(ident->apply(atom) == atom);
  CHECK(poset_morphism_hom({0, 1}, Poset::chain(2), Poset::chain(3)).has_value());
  CHECK_THROWS_AS(poset_morphism_hom({1, 0}, Poset::chain(2), Poset::chain(2)),
                  PreconditionError);
  CHECK_THROWS_AS(poset_morphism_hom({0}, Poset::chain(2), Poset::chain(2)),
                  PreconditionError);
}

TEST_CASE("generator correspondence isomorphism") {
  auto a = anticlique_algebra(Graph::complete(4));
  auto b = anticlique_algebra(Graph::complete(4));
  CHECK(generator_correspondence_isomorphism(a.vertex_family, b.vertex_family));
  auto c = anticlique_algebra(Graph::path(4));
  CHECK(!generator_correspondence_isomorphism(a.vertex_family, c.vertex_family));
}
