#include <doctest.h>

#include <algorithm>

#include "freeboole/core.hpp"
#include "freeboole/free_construct.hpp"
#include "oracles.hpp"

using namespace freeboole;

TEST_CASE("element basics") {
  Element e = Element::of(5, {0, 2});
  CHECK(e.count() == 2);
  CHECK(e.test(0));
  CHECK(!e.test(1));
  CHECK((~e).points() == std::vector<int>{1, 3, 4});
  CHECK((e & Element::of(5, {2, 3})) == Element::singleton(5, 2));
  CHECK((e | Element::of(5, {1})) == Element::of(5, {0, 1, 2}));
  CHECK(e.subset_of(Element::full(5)));
  CHECK(!Element::full(5).subset_of(e));
  CHECK(e.minus(Element::singleton(5, 0)) == Element::singleton(5, 2));

  CHECK_THROWS_AS((void)(e & Element::of(4, {1})), DimensionError);
  CHECK_THROWS_AS((void)e.test(7), DimensionError);
}

TEST_CASE("element ordering follows the bit pattern") {
  // {} < {0} < {1} < {0,1} < {2}
  std::vector<Element> v = {Element::of(3, {2}), Element::of(3, {0, 1}), Element(3),
                            Element::of(3, {1}), Element::of(3, {0})};
  std::sort(v.begin(), v.end());
  CHECK(v[0] == Element(3));
  CHECK(v[1] == Element::of(3, {0}));
  CHECK(v[2] == Element::of(3, {1}));
  CHECK(v[3] == Element::of(3, {0, 1}));
  CHECK(v[4] == Element::of(3, {2}));
}

TEST_CASE("closure computes the signature partition") {
  SUBCASE("one generator splits the ground in two") {
    SetAlgebra a = closure(3, {Element::of(3, {0})});
    CHECK(a.atom_count() == 2);
    CHECK(a.atoms()[0] == Element::of(3, {0}));
    CHECK(a.atoms()[1] == Element::of(3, {1, 2}));
    CHECK(a.size() == std::uint64_t{4});
  }
  SUBCASE("two singletons split a three-point ground completely") {
    SetAlgebra a = closure(3, {Element::of(3, {0}), Element::of(3, {1})});
    CHECK(a.atom_count() == 3);
    CHECK(a.size() == std::uint64_t{8});
  }
  SUBCASE("vertex generators of the complete graph") {
    StructureAlgebra sa = anticlique_algebra(Graph::complete(4));
    CHECK(sa.algebra.atom_count() == 5);
    CHECK(sa.algebra.size() == std::uint64_t{32});
  }
  SUBCASE("membership is union-of-atoms") {
    SetAlgebra a = closure(3, {Element::of(3, {0})});
    CHECK(a.contains(Element::of(3, {1, 2})));
    CHECK(!a.contains(Element::of(3, {1})));
    CHECK_THROWS_AS((void)a.atom_support(Element::of(3, {1})), MembershipError);
  }
  SUBCASE("empty ground is rejected, one point is allowed") {
    CHECK_THROWS_AS(closure(0, {}), DimensionError);
    CHECK(closure(1, {}).atom_count() == 1);
  }
}

TEST_CASE("generator family construction guards") {
  SetAlgebra a = powerset(3);
  CHECK_THROWS_AS(GeneratorFamily(a, {Element(3)}), PreconditionError);  // 0 not allowed
  CHECK_THROWS_AS(GeneratorFamily(a, {Element::of(3, {0}), Element::of(3, {0})}),
                  PreconditionError);
  SetAlgebra small = closure(3, {Element::of(3, {0})});
  CHECK_THROWS_AS(GeneratorFamily(small, {Element::of(3, {1})}), MembershipError);
}

TEST_CASE("elementary products") {
  SetAlgebra a = powerset(3);
  GeneratorFamily fam(a, {Element::of(3, {0}), Element::of(3, {1})});
  CHECK(elementary_product(fam, {}) == Element::full(3));
  CHECK(elementary_product(fam, {{0, true}, {1, false}}) == Element::of(3, {0}));
  CHECK_THROWS_AS(elementary_product(fam, {{5, true}}), PreconditionError);

  SUBCASE("a+ meets c+ in the path algebra at the two-point anticlique") {
    StructureAlgebra p3 = anticlique_algebra(Graph::path(3));
    GeneratorFamily vf = p3.vertex_family;
    Element prod = elementary_product(vf, {{0, true}, {2, true}});
    // Oracle: enumerate the anticliques directly and intersect memberships.
    auto anti = oracles::naive_anticliques(3, {0b011, 0b110});
    std::vector<int> expected;
    for (std::size_t i = 0; i < anti.size(); ++i)
      if ((anti[i] & 0b101) == 0b101) expected.push_back(static_cast<int>(i));
    CHECK(prod.points() == expected);
    CHECK(prod.count() == 1);  // only the anticlique {a,c}
  }
}

TEST_CASE("extension criterion") {
  SUBCASE("identity map extends to the identity") {
    StructureAlgebra sa = anticlique_algebra(Graph::path(3));
    auto hom = sikorski_extends(PartialMap(sa.vertex_family, sa.algebra,
                                           sa.vertex_family.members()));
    REQUIRE(hom.has_value());
    for (const auto& atom : sa.algebra.atoms()) CHECK(hom->apply(atom) == atom);
  }
  SUBCASE("meet preservation can fail") {
    SetAlgebra a = powerset(2);
    GeneratorFamily fam(a, {Element::of(2, {0}), Element::of(2, {1})});
    SetAlgebra target = powerset(1);
    auto hom = sikorski_extends(
        PartialMap(fam, target, {Element::full(1), Element::full(1)}));
    CHECK(!hom.has_value());  // a*b = 0 but the images meet at 1
  }
  SUBCASE("2-preserving maps on 2-independent families extend") {
    StructureAlgebra sa = anticlique_algebra(Graph::complete(3));
    SetAlgebra target = powerset(3);
    std::vector<Element> images = {Element::of(3, {0}), Element::of(3, {1}),
                                   Element::of(3, {2})};
    PartialMap pm(sa.vertex_family, target, images);
    REQUIRE(is_n_preserving(pm, Degree::finite(2)));
    CHECK(sikorski_extends(pm).has_value());
  }
}

TEST_CASE("n-preservation") {
  SUBCASE("all-zero images preserve everything") {
    SetAlgebra a = powerset(2);
    GeneratorFamily fam(a, {Element::of(2, {0}), Element::of(2, {1})});
    PartialMap pm(fam, powerset(1), {Element(1), Element(1)});
    CHECK(is_n_preserving(pm, Degree::omega()));
  }
  SUBCASE("triple wipeout needs degree three") {
    StructureAlgebra sa =
        anticlique_algebra(Hypergraph(3, std::vector<std::vector<int>>{{0, 1, 2}}));
    SetAlgebra target = powerset(3);
    // Three images with a nonempty triple intersection.
    std::vector<Element> images = {Element::of(3, {0, 1}), Element::of(3, {0, 2}),
                                   Element::of(3, {0})};
    PartialMap pm(sa.vertex_family, target, images);
    CHECK(is_n_preserving(pm, Degree::finite(2)));
    CHECK(!is_n_preserving(pm, Degree::finite(3)));
    CHECK(!is_n_preserving(pm, Degree::omega()));
  }
  SUBCASE("zero-product-free families are vacuously preserved") {
    SetAlgebra a = powerset(2);
    GeneratorFamily fam(a, {Element::of(2, {0, 1}), Element::of(2, {0})});
    PartialMap pm(fam, powerset(1), {Element::full(1), Element::full(1)});
    CHECK(is_n_preserving(pm, Degree::omega()));
  }
}

TEST_CASE("homomorphism application") {
  StructureAlgebra sa = anticlique_algebra(Graph::complete(3));
  auto hom = sikorski_extends(
      PartialMap(sa.vertex_family, sa.algebra, sa.vertex_family.members()));
  REQUIRE(hom.has_value());
  CHECK(apply_hom(*hom, sa.algebra.zero()) == sa.algebra.zero());
  CHECK(apply_hom(*hom, sa.algebra.one()) == sa.algebra.one());
  CHECK_THROWS_AS(apply_hom(*hom, Element::full(2)), Error);
}

TEST_CASE("degree type") {
  CHECK(Degree::finite(2) <= Degree::finite(3));
  CHECK(Degree::finite(5) <= Degree::omega());
  CHECK(!(Degree::omega() <= Degree::finite(9)));
  CHECK(Degree::omega() <= Degree::omega());
  CHECK(Degree::finite(2).to_string() == "2");
  CHECK(Degree::omega().to_string() == "omega");
  CHECK_THROWS_AS(Degree::finite(0), PreconditionError);
}
