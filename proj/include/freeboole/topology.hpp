#pragma once

#include <string>
#include <vector>

#include "freeboole/element.hpp"
#include "freeboole/graphs.hpp"

namespace freeboole {

/// A labeled family of subsets of a finite point set, used as a closed
/// subbase.
struct SubbaseFamily {
  int point_count = 0;
  std::vector<Element> sets;
  std::vector<std::string> labels;
};

/// Every subfamily of at most n sets has nonempty intersection.  For a
/// family of more than n sets the size-n subfamilies carry the condition;
/// a smaller family must intersect as a whole.  This keeps linkedness
/// antitone in n, so n-ary implies m-ary for m >= n.
bool is_n_linked(const std::vector<Element>& sets, int n);

struct NaryResult {
  bool is_nary = false;
  // On failure, the least witnessing n-linked subfamily with empty
  // intersection (indices into the subbase, ascending).
  std::vector<int> counterexample;
};

/// Every n-linked subfamily has nonempty intersection.  Only subset-maximal
/// n-linked subfamilies are examined: a failing family extends to a failing
/// maximal one.
NaryResult is_n_ary(const SubbaseFamily& subbase, int n, std::uint64_t subset_budget = 1 << 22);

/// The closed subbase v+/v- over the anticlique points of the structure.
SubbaseFamily canonical_subbase(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap);
SubbaseFamily canonical_subbase(const Hypergraph& h, std::uint64_t cap = kDefaultAnticliqueCap);

/// Least n >= 2 for which the canonical subbase is n-ary.  Bounded above by
/// max(2, largest edge size); the bound is enforced.
int cmpn_upper(const Graph& g, std::uint64_t cap = kDefaultAnticliqueCap,
               std::uint64_t subset_budget = 1 << 22);
int cmpn_upper(const Hypergraph& h, std::uint64_t cap = kDefaultAnticliqueCap,
               std::uint64_t subset_budget = 1 << 22);

/// Subbase for the disjoint union of the two point sets: both subbases moved
/// into place plus the two whole blocks.  Inputs must be n-ary; the result is
/// checked to be n-ary as well.
SubbaseFamily disjoint_union_nary(const SubbaseFamily& s, const SubbaseFamily& t, int n,
                                  std::uint64_t subset_budget = 1 << 22);

}  // namespace freeboole
