#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freeboole/element.hpp"

namespace freeboole {

/// Degree of freeness / independence: a positive integer or omega.
/// Omega compares above every finite degree.
class Degree {
public:
  static Degree omega() { return Degree(true, 0); }
  static Degree finite(int n);

  bool is_omega() const { return omega_; }
  int value() const;  // finite degrees only

  bool operator==(const Degree& o) const = default;
  bool operator<=(const Degree& o) const;
  std::string to_string() const;

private:
  Degree(bool om, int n) : omega_(om), n_(n) {}
  bool omega_ = false;
  int n_ = 1;
};

/// A subalgebra of the powerset of [0, ground_size) described by generators.
/// The atom partition is computed eagerly: two points fall in the same atom
/// iff they agree on membership in every generator.  Atoms are ordered by
/// their smallest point.
class SetAlgebra {
public:
  SetAlgebra(int ground_size, std::vector<Element> generators);

  int ground_size() const { return ground_; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& atoms() const { return atoms_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }

  // |A| = 2^atom_count; engaged only while it fits in 64 bits.
  std::optional<std::uint64_t> size() const;

  Element zero() const { return Element(ground_); }
  Element one() const { return Element::full(ground_); }

  // Membership: e belongs to the algebra iff it is a union of atoms.
  bool contains(const Element& e) const;
  // Indices of the atoms below e; requires contains(e).
  std::vector<int> atom_support(const Element& e) const;
  // The element with the given atom support.
  Element element_from_atoms(const std::vector<int>& atom_indices) const;
  Element element_from_atom_mask(std::uint64_t mask) const;  // atom_count <= 64

  // All nonzero elements in atom-mask order; atom_count must stay small.
  std::vector<Element> nonzero_elements(int max_atoms = 16) const;

  bool same_partition(const SetAlgebra& o) const;

private:
  int ground_;
  std::vector<Element> generators_;
  std::vector<Element> atoms_;
};

/// Builds the subalgebra generated by the given sets.
SetAlgebra closure(int ground_size, std::vector<Element> generators);

/// The full powerset algebra on n points, generated by the singletons.
SetAlgebra powerset(int n);

/// Assignment of exponents (1 = plain, 0 = complemented) to member indices.
using ExponentMap = std::map<int, bool>;

/// A distinguished finite family X of nonzero elements of an algebra.
/// Duplicates and 0 are rejected at construction.
class GeneratorFamily {
public:
  GeneratorFamily(SetAlgebra algebra, std::vector<Element> members);

  const SetAlgebra& algebra() const { return algebra_; }
  const std::vector<Element>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  // Whether the members generate the whole algebra (same atom partition).
  bool generates() const;

  // Meet of the members indexed by mask; empty mask gives 1.
  Element meet_of_mask(std::uint64_t mask) const;
  // Full elementary product: members in `positives` plain, all others
  // complemented.
  Element signed_product(std::uint64_t positives) const;

  // Per ground point, the set of members containing it, as a bit mask over
  // member indices.  The distinct values are the realized signatures.
  const std::vector<std::uint64_t>& point_signatures() const { return sigs_; }
  const std::vector<std::uint64_t>& realized_signatures() const { return realized_; }

private:
  SetAlgebra algebra_;
  std::vector<Element> members_;
  std::vector<std::uint64_t> sigs_;
  std::vector<std::uint64_t> realized_;  // sorted, unique
};

/// Intersection over the exponent map's domain of member^exponent.
/// The empty map yields the full ground set.
Element elementary_product(const GeneratorFamily& family, const ExponentMap& exponents);

/// A partial map from a generator family into a target algebra, given by the
/// list of images parallel to the family members.
struct PartialMap {
  GeneratorFamily source;
  SetAlgebra target;
  std::vector<Element> images;

  PartialMap(GeneratorFamily src, SetAlgebra tgt, std::vector<Element> imgs);
};

/// A homomorphism between two set algebras, stored as the images of the
/// source atoms.  Images of distinct atoms are disjoint and cover the target
/// ground (1 maps to 1).
class Homomorphism {
public:
  Homomorphism(SetAlgebra source, SetAlgebra target, std::vector<Element> atom_images);

  const SetAlgebra& source() const { return source_; }
  const SetAlgebra& target() const { return target_; }
  const std::vector<Element>& atom_images() const { return atom_images_; }

  // Image of e: union of atom images over atoms below e.
  Element apply(const Element& e) const;

private:
  SetAlgebra source_;
  SetAlgebra target_;
  std::vector<Element> atom_images_;
};

/// Sikorski's extension criterion.  Returns the unique homomorphism on the
/// subalgebra generated by the family that extends the partial map, if every
/// zero elementary product of the family maps to a zero elementary product of
/// the images; absent otherwise.  The check runs on point signatures: the map
/// extends iff every signature realized in the target under the images is
/// realized in the source under the family.
std::optional<Homomorphism> sikorski_extends(const PartialMap& map);

/// True iff every subfamily S of the source with |S| <= n (every finite
/// subfamily for omega) and zero meet has zero image meet.
bool is_n_preserving(const PartialMap& map, Degree n);

/// Image of e under h; e must belong to h's source algebra.
Element apply_hom(const Homomorphism& h, const Element& e);

}  // namespace freeboole
