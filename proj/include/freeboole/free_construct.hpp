#pragma once

#include <optional>
#include <vector>

#include "freeboole/core.hpp"
#include "freeboole/graphs.hpp"

namespace freeboole {

inline constexpr int kDefaultFamilyBudget = 20;

/// An algebra built from the anticliques of a graph or hypergraph: ground
/// points are the anticliques, generators are the sets v+ of anticliques
/// containing each vertex.
struct StructureAlgebra {
  SetAlgebra algebra;
  GeneratorFamily vertex_family;  // v+ per vertex, in vertex order
  AnticliqueIndex index;
};

StructureAlgebra anticlique_algebra(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);
StructureAlgebra anticlique_algebra(const Hypergraph& h,
                                    std::uint64_t cap = kDefaultAnticliqueCap);
StructureAlgebra clique_algebra(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);

struct IndependenceViolation {
  enum class Kind {
    sum_is_one,       // the join of the members is 1
    covered_by_rest,  // S has nonzero meet below the join of the others
  };
  Kind kind;
  std::vector<int> subset;  // member indices, ascending

  bool operator==(const IndependenceViolation&) const = default;
};

/// Outcome of the independence decision procedure on a finite family.
/// degree is the least n for which the family is n-independent and is
/// present exactly when the family is omega-independent; degree 1 means
/// independent.
struct IndependenceReport {
  bool omega_independent = false;
  std::optional<Degree> degree;
  std::vector<IndependenceViolation> violations;
};

IndependenceReport independence_report(const GeneratorFamily& family,
                                       int member_budget = kDefaultFamilyBudget);

/// All subset-minimal zero-meet subsets, each sorted, listed by size then
/// lexicographically.
std::vector<std::vector<int>> minimal_zero_sets(const GeneratorFamily& family,
                                                int member_budget = kDefaultFamilyBudget);

/// The hypergraph on the family's index set whose edges are the minimal
/// zero-meet subsets.  For 2-independent families this is a graph.
struct PerpHypergraph {
  Hypergraph hypergraph;
  GeneratorFamily family;
};

PerpHypergraph perp_hypergraph(const GeneratorFamily& family,
                               int member_budget = kDefaultFamilyBudget);

/// Builds the anticlique algebra of the structure, extracts the perp
/// hypergraph of the vertex family, and checks that it reproduces the
/// structure under the identity vertex map; also checks the algebra-side
/// round trip through a two-way extension.
bool roundtrip_check(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);
bool roundtrip_check(const Hypergraph& h, std::uint64_t cap = kDefaultAnticliqueCap);

/// Extension of an n-preserving map on an n-independent generating family.
/// Preconditions are checked and reported as PreconditionError; the
/// extension itself always exists once they hold.
Homomorphism extend_n_preserving(const GeneratorFamily& family, const SetAlgebra& target,
                                 const std::vector<Element>& images, Degree n);

/// Whether the index-parallel map between two equally sized families extends
/// to an isomorphism: both directions pass the extension criterion and the
/// compositions fix every atom.
bool generator_correspondence_isomorphism(const GeneratorFamily& a, const GeneratorFamily& b);

struct DegreeSearchBudget {
  std::uint64_t max_algebra_size = 64;       // |A| bound
  std::uint64_t max_subsets = 50'000'000;    // scanned candidate subsets
};

/// Least n for which some n-independent generating subset of the nonzero
/// elements exists, by exhaustive search ordered by subset size then
/// lexicographic position.
std::optional<Degree> freeness_degree_of_algebra(const SetAlgebra& a,
                                                 const DegreeSearchBudget& budget = {});

/// Closure of the family under finite meets, together with 0 and 1.
/// Returned sorted by bit pattern.
std::vector<Element> semigroup_closure(const GeneratorFamily& family,
                                       std::size_t size_budget = 4096);

/// h (a list of nonzero elements) is disjunctive iff for every nonempty
/// subset M of h the map g -> (elements of M below g) extends to a
/// homomorphism from <h> into the powerset of M sending each member k to the
/// elements of M below k.
bool is_disjunctive(const std::vector<Element>& h, std::uint64_t subset_budget = 1 << 20);

/// For strictly order-preserving f, the induced homomorphism between the
/// incomparability algebras, mapping p+ to f(p)+.
std::optional<Homomorphism> poset_morphism_hom(const std::vector<int>& f, const Poset& p,
                                               const Poset& q);

}  // namespace freeboole
