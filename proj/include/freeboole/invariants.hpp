#pragma once

#include <string>
#include <vector>

#include "freeboole/core.hpp"
#include "freeboole/free_construct.hpp"

namespace freeboole {

/// A maximum/minimum search outcome: the size plus the lexicographically
/// least witness of that size (member indices, ascending).
struct SizedWitness {
  int size = 0;
  std::vector<int> witness;
};

/// Largest subfamily with pairwise zero meets (a maximum clique of the
/// disjointness graph), by branch and bound.
SizedWitness max_pairwise_disjoint(const GeneratorFamily& family,
                                   int member_budget = kDefaultFamilyBudget);

/// Largest subfamily that is independent (degree 1), by pruned search.
SizedWitness max_independent_subfamily(const GeneratorFamily& family,
                                       int member_budget = kDefaultFamilyBudget);

/// Largest n-independent subset of the nonzero elements of the algebra.
/// The witness lists positions into the atom-mask ordering of the nonzero
/// elements.
struct ElementWitness {
  int size = 0;
  std::vector<Element> witness;
};
ElementWitness n_ind_number(const SetAlgebra& a, Degree n, int max_atoms = 6);

/// All subset-maximal n-independent subsets of the nonzero elements, with the
/// finite maximality consequence attached to each: the complement of the join
/// is an atom.  min_size is the least family size found.
struct MaximalFamilies {
  std::vector<std::vector<Element>> families;
  std::vector<bool> complement_is_atom;
  int min_size = 0;
  std::string note;  // finite algebras have atoms, so min_size degenerates to 1
};
MaximalFamilies maximal_n_independent_families(const SetAlgebra& a, Degree n, int max_atoms = 6);

/// No member lies below the join of the others.  0 and 1 are rejected.
bool is_ideal_independent(const std::vector<Element>& x);

/// Enumerates the subset-maximal ideal-independent subsets of the nonzero,
/// non-unit elements and reports whether each joins to 1.
struct MaximalIdealIndependentReport {
  int family_count = 0;
  int min_size = 0;
  bool all_join_one = false;
};
MaximalIdealIndependentReport maximal_ideal_independent_check(const SetAlgebra& a,
                                                              int max_atoms = 6);

/// Every nonzero element bounds some member from below, or its complement
/// does.
bool is_weakly_dense(const std::vector<Element>& y, const SetAlgebra& a);

bool is_incomparable(const std::vector<Element>& x);

/// No member belongs to the subalgebra generated by the others.
bool is_irredundant(const std::vector<Element>& x, const SetAlgebra& a);

/// The members of the family split by `subject`: 0 < subject*f < f.
struct NormSet {
  Element subject;
  std::vector<int> split_members;  // indices into the family, ascending
};
NormSet norm(const Element& subject, const std::vector<Element>& family);

bool is_moderate_in(const std::vector<Element>& f, const std::vector<Element>& g);
bool is_saturated(const Element& a, const std::vector<Element>& f);

/// All nonzero prefix elementary products of the ordered generators: for each
/// prefix length, every sign pattern over that prefix.  Zero products are
/// dropped and counted.
struct PrefixProductFamily {
  std::vector<Element> members;           // deduplicated, in first-seen order
  std::vector<int> prefix_length;         // parallel: generators involved
  int dropped_zero_products = 0;
};
PrefixProductFamily prefix_product_family(const std::vector<Element>& generators,
                                          int generator_budget = 16);

/// Headline numbers for one family, computed exhaustively at small scale.
struct InvariantReport {
  int atom_count = 0;
  SizedWitness max_pairwise_disjoint;
  SizedWitness max_independent;
  std::vector<std::pair<std::string, int>> n_ind;  // (degree label, value)
  std::string notes;
};
InvariantReport invariant_report(const GeneratorFamily& family, const std::vector<Degree>& degrees,
                                 int max_atoms = 6);

}  // namespace freeboole
