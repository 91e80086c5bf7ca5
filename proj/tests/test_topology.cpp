#include <doctest.h>

#include <random>

#include "freeboole/checks.hpp"
#include "freeboole/topology.hpp"
#include "oracles.hpp"

using namespace freeboole;

TEST_CASE("linkedness") {
  CHECK(is_n_linked({Element::of(3, {1})}, 5));
  CHECK(!is_n_linked({Element::of(2, {0}), Element::of(2, {1})}, 2));
  CHECK(!is_n_linked({Element::of(2, {0}), Element::of(2, {1})}, 3));
  std::vector<Element> tri = {Element::of(3, {0, 1}), Element::of(3, {1, 2}),
                              Element::of(3, {0, 2})};
  CHECK(is_n_linked(tri, 2));
  CHECK(!is_n_linked(tri, 3));
  CHECK(!is_n_linked({Element(3)}, 1));  // an empty set is never linked
}

TEST_CASE("arity of canonical subbases") {
  SUBCASE("graphs are 2-ary") {
    for (const auto& g : all_graphs(4)) CHECK(is_n_ary(canonical_subbase(g), 2).is_nary);
  }
  SUBCASE("the single 3-edge needs arity three") {
    Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
    auto s = canonical_subbase(tri);
    auto fail = is_n_ary(s, 2);
    CHECK(!fail.is_nary);
    // The least counterexample: the three v+ sets, pairwise meeting, empty meet.
    REQUIRE(fail.counterexample.size() == 3);
    CHECK(s.labels[fail.counterexample[0]] == "v1+");
    CHECK(is_n_ary(s, 3).is_nary);
  }
  SUBCASE("singleton subbases are 2-ary") {
    SubbaseFamily singles;
    singles.point_count = 4;
    for (int i = 0; i < 4; ++i) {
      singles.sets.push_back(Element::singleton(4, i));
      singles.labels.push_back("s" + std::to_string(i));
    }
    CHECK(is_n_ary(singles, 2).is_nary);
  }
  SUBCASE("subset budget") {
    Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK_THROWS_AS(is_n_ary(canonical_subbase(tri), 2, 2), BudgetError);
  }
}

TEST_CASE("canonical subbase shape") {
  auto k2 = canonical_subbase(Graph::complete(2));
  CHECK(k2.point_count == 3);  // anticliques {}, {a}, {b}
  CHECK(k2.sets.size() == 4);
  CHECK(k2.labels == std::vector<std::string>{"v1+", "v1-", "v2+", "v2-"});
  CHECK(k2.sets[0] == Element::of(3, {1}));     // a+ = {{a}}
  CHECK(k2.sets[1] == Element::of(3, {0, 2}));  // a- = {{}, {b}}

  auto single = canonical_subbase(Graph::edgeless(1));
  CHECK(single.point_count == 2);
  CHECK(single.sets[0].count() == 1);
  CHECK(single.sets[1].count() == 1);

  CHECK(canonical_subbase(Graph::complete(4)).point_count == 5);
  CHECK(canonical_subbase(Graph::complete(4)).sets.size() == 8);
}

TEST_CASE("compactness upper bounds") {
  CHECK(cmpn_upper(Graph::path(4)) == 2);
  CHECK(cmpn_upper(Graph::edgeless(3)) == 2);
  Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(cmpn_upper(tri) == 3);
  std::vector<std::vector<int>> all3;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) all3.push_back({a, b, c});
  CHECK(cmpn_upper(Hypergraph(4, all3)) == 3);
}

TEST_CASE("disjoint unions of subbases") {
  auto sa = canonical_subbase(Graph::path(3));
  auto sb = canonical_subbase(Graph::complete(2));
  auto w = disjoint_union_nary(sa, sb, 2);
  CHECK(w.point_count == sa.point_count + sb.point_count);
  CHECK(w.sets.size() == sa.sets.size() + sb.sets.size() + 2);
  CHECK(is_n_ary(w, 2).is_nary);

  SUBCASE("an empty factor changes nothing") {
    SubbaseFamily empty;
    auto unchanged = disjoint_union_nary(sa, empty, 2);
    CHECK(unchanged.point_count == sa.point_count);
    CHECK(unchanged.sets.size() == sa.sets.size() + 1);  // only the left block
    CHECK(is_n_ary(unchanged, 2).is_nary);
  }
  SUBCASE("inputs must have the requested arity") {
    Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK_THROWS_AS(disjoint_union_nary(canonical_subbase(tri), sb, 2), PreconditionError);
  }
  SUBCASE("3-ary factors give a 3-ary union") {
    Hypergraph tri(3, std::vector<std::vector<int>>{{0, 1, 2}});
    auto w3 = disjoint_union_nary(canonical_subbase(tri), canonical_subbase(tri), 3);
    CHECK(is_n_ary(w3, 3).is_nary);
  }
}

TEST_CASE("pruned arity decision matches the oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 80; ++round) {
    SubbaseFamily sb;
    sb.point_count = 2 + static_cast<int>(rng() % 4);
    int sets = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < sets; ++i) {
      sb.sets.push_back(Element::from_mask(
          sb.point_count, rng() & ((std::uint64_t{1} << sb.point_count) - 1)));
      sb.labels.push_back("s" + std::to_string(i));
    }
    for (int n = 1; n <= 3; ++n)
      CHECK(is_n_ary(sb, n).is_nary == oracles::naive_n_ary(sb, n));
  }
}
