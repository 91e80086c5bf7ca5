#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "freeboole/core.hpp"
#include "freeboole/free_construct.hpp"
#include "freeboole/graphs.hpp"

namespace freeboole {

/// Direct product of set algebras, realized on the disjoint union of the
/// factor grounds.  The factor embeddings place an element in its block and 0
/// everywhere else.
struct DirectProduct {
  SetAlgebra algebra;
  std::vector<SetAlgebra> factors;
  std::vector<int> offsets;  // start of each factor's block

  Element embed(int factor, const Element& e) const;
  Element block(int factor) const;  // image of the factor's 1
};

DirectProduct direct_product(const std::vector<SetAlgebra>& algebras,
                             int ground_budget = 4096);

/// The union of the factor families moved into the product, with provenance.
struct EmbeddedFamily {
  DirectProduct product;
  GeneratorFamily family;
  std::vector<std::pair<int, int>> provenance;  // (factor, member index)
};

EmbeddedFamily embedded_product_family(const std::vector<GeneratorFamily>& families,
                                       int ground_budget = 4096);

/// Free product realized on tuples of factor atoms (factor 0 most
/// significant).  Embedded factor images generate the full powerset of the
/// tuple ground; the embedded subalgebras are independent: elementary
/// products of nonzero elements taken across distinct factors are nonzero.
struct FreeProduct {
  SetAlgebra algebra;
  std::vector<SetAlgebra> factors;
  std::vector<std::uint64_t> strides;  // tuple index weights per factor

  Element embed(int factor, const Element& e) const;
};

FreeProduct free_product(const std::vector<SetAlgebra>& algebras,
                         std::uint64_t ground_budget = 1 << 20);

/// Free product of the factor anticlique algebras glued over a shared induced
/// subgraph, realized as the anticlique algebra of the amalgamated union.
/// Construction validates: the combined vertex family is 2-independent and
/// generating; the factor inclusions agree on the subalgebra generated by the
/// shared vertices; and (sampled) pairs of 2-preserving maps on the factor
/// families that agree on the shared part extend jointly.
struct AmalgamatedFreeProduct {
  AmalgamatedUnion glued;
  SetAlgebra algebra;
  GeneratorFamily family;  // v+ of the glued graph
};

AmalgamatedFreeProduct amalgamated_free_product_via_graphs(
    const std::vector<Graph>& graphs, const SharedEmbedding& shared,
    std::uint64_t cap = kDefaultAnticliqueCap, int universal_samples = 16,
    std::uint64_t seed = 1);

}  // namespace freeboole
