#include "freeboole/core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace freeboole {

Degree Degree::finite(int n) {
  if (n < 1) throw PreconditionError("freeness degree must be >= 1");
  return Degree(false, n);
}

int Degree::value() const {
  if (omega_) throw PreconditionError("omega degree has no finite value");
  return n_;
}

bool Degree::operator<=(const Degree& o) const {
  if (o.omega_) return true;
  if (omega_) return false;
  return n_ <= o.n_;
}

std::string Degree::to_string() const { return omega_ ? "omega" : std::to_string(n_); }

SetAlgebra::SetAlgebra(int ground_size, std::vector<Element> generators)
    : ground_(ground_size), generators_(std::move(generators)) {
  if (ground_size < 1) throw DimensionError("ground set must be nonempty");
  for (const auto& g : generators_)
    if (g.ground_size() != ground_size)
      throw DimensionError("generator ground size does not match the algebra");

  // Signature partition: group points by their membership pattern across the
  // generators, cells ordered by smallest contained point.
  std::map<std::vector<std::uint64_t>, int> cell_of_sig;
  std::vector<std::vector<int>> cells;
  const int nwords = (static_cast<int>(generators_.size()) + 63) / 64;
  for (int p = 0; p < ground_size; ++p) {
    std::vector<std::uint64_t> sig(nwords, 0);
    for (std::size_t gi = 0; gi < generators_.size(); ++gi)
      if (generators_[gi].test(p)) sig[gi / 64] |= std::uint64_t{1} << (gi % 64);
    auto [it, fresh] = cell_of_sig.emplace(std::move(sig), static_cast<int>(cells.size()));
    if (fresh) cells.emplace_back();
    cells[it->second].push_back(p);
  }
  atoms_.reserve(cells.size());
  for (const auto& cell : cells) atoms_.push_back(Element::from_points(ground_size, cell));
}

std::optional<std::uint64_t> SetAlgebra::size() const {
  if (atom_count() >= 64) return std::nullopt;
  return std::uint64_t{1} << atom_count();
}

bool SetAlgebra::contains(const Element& e) const {
  if (e.ground_size() != ground_) return false;
  for (const auto& a : atoms_) {
    Element m = a & e;
    if (!m.empty() && m != a) return false;
  }
  return true;
}

std::vector<int> SetAlgebra::atom_support(const Element& e) const {
  if (!contains(e)) throw MembershipError("element is not a union of atoms of this algebra");
  std::vector<int> out;
  for (int i = 0; i < atom_count(); ++i)
    if (atoms_[i].subset_of(e)) out.push_back(i);
  return out;
}

Element SetAlgebra::element_from_atoms(const std::vector<int>& atom_indices) const {
  Element e(ground_);
  for (int i : atom_indices) {
    if (i < 0 || i >= atom_count()) throw DimensionError("atom index out of range");
    e = e | atoms_[i];
  }
  return e;
}

Element SetAlgebra::element_from_atom_mask(std::uint64_t mask) const {
  Element e(ground_);
  while (mask) {
    int i = std::countr_zero(mask);
    if (i >= atom_count()) throw DimensionError("atom mask exceeds atom count");
    e = e | atoms_[i];
    mask &= mask - 1;
  }
  return e;
}

std::vector<Element> SetAlgebra::nonzero_elements(int max_atoms) const {
  if (atom_count() > max_atoms)
    throw BudgetError("algebra has " + std::to_string(atom_count()) +
                      " atoms, exceeding the element enumeration budget of " +
                      std::to_string(max_atoms));
  std::vector<Element> out;
  const std::uint64_t total = std::uint64_t{1} << atom_count();
  out.reserve(total - 1);
  for (std::uint64_t m = 1; m < total; ++m) out.push_back(element_from_atom_mask(m));
  return out;
}

bool SetAlgebra::same_partition(const SetAlgebra& o) const {
  return ground_ == o.ground_ && atoms_ == o.atoms_;
}

SetAlgebra closure(int ground_size, std::vector<Element> generators) {
  return SetAlgebra(ground_size, std::move(generators));
}

SetAlgebra powerset(int n) {
  std::vector<Element> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(Element::singleton(n, i));
  return SetAlgebra(n, std::move(gens));
}

GeneratorFamily::GeneratorFamily(SetAlgebra algebra, std::vector<Element> members)
    : algebra_(std::move(algebra)), members_(std::move(members)) {
  if (members_.size() > 63)
    throw BudgetError("generator families are limited to 63 members");
  std::set<Element> seen;
  for (const auto& m : members_) {
    if (m.ground_size() != algebra_.ground_size())
      throw DimensionError("family member ground size does not match the algebra");
    if (m.empty()) throw PreconditionError("0 is not allowed in a generator family");
    if (!algebra_.contains(m))
      throw MembershipError("family member is not an element of the algebra");
    if (!seen.insert(m).second)
      throw PreconditionError("duplicate member in generator family");
  }
  sigs_.assign(algebra_.ground_size(), 0);
  for (std::size_t mi = 0; mi < members_.size(); ++mi)
    for (int p : members_[mi].points()) sigs_[p] |= std::uint64_t{1} << mi;
  realized_ = sigs_;
  std::sort(realized_.begin(), realized_.end());
  realized_.erase(std::unique(realized_.begin(), realized_.end()), realized_.end());
}

bool GeneratorFamily::generates() const {
  return closure(algebra_.ground_size(), members_).same_partition(algebra_);
}

Element GeneratorFamily::meet_of_mask(std::uint64_t mask) const {
  Element r = algebra_.one();
  while (mask) {
    int i = std::countr_zero(mask);
    if (i >= size()) throw DimensionError("member mask exceeds family size");
    r = r & members_[i];
    mask &= mask - 1;
  }
  return r;
}

Element GeneratorFamily::signed_product(std::uint64_t positives) const {
  Element r = algebra_.one();
  for (int i = 0; i < size(); ++i) {
    if (positives & (std::uint64_t{1} << i))
      r = r & members_[i];
    else
      r = r & ~members_[i];
  }
  return r;
}

Element elementary_product(const GeneratorFamily& family, const ExponentMap& exponents) {
  Element r = family.algebra().one();
  for (const auto& [idx, plain] : exponents) {
    if (idx < 0 || idx >= family.size())
      throw PreconditionError("exponent map index outside the family");
    r = r & (plain ? family.members()[idx] : ~family.members()[idx]);
  }
  return r;
}

PartialMap::PartialMap(GeneratorFamily src, SetAlgebra tgt, std::vector<Element> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != static_cast<std::size_t>(source.size()))
    throw PreconditionError("image list length must equal the family size");
  for (const auto& img : images)
    if (!target.contains(img))
      throw MembershipError("image is not an element of the target algebra");
}

Homomorphism::Homomorphism(SetAlgebra source, SetAlgebra target, std::vector<Element> atom_images)
    : source_(std::move(source)), target_(std::move(target)), atom_images_(std::move(atom_images)) {
  if (atom_images_.size() != static_cast<std::size_t>(source_.atom_count()))
    throw PreconditionError("one image per source atom required");
  Element seen(target_.ground_size());
  for (const auto& img : atom_images_) {
    if (img.intersects(seen))
      throw PreconditionError("atom images must be pairwise disjoint");
    seen = seen | img;
  }
  if (!seen.is_full()) throw PreconditionError("atom images must cover the target ground");
}

Element Homomorphism::apply(const Element& e) const {
  auto support = source_.atom_support(e);  // throws MembershipError if e is foreign
  Element out(target_.ground_size());
  for (int i : support) out = out | atom_images_[i];
  return out;
}

std::optional<Homomorphism> sikorski_extends(const PartialMap& map) {
  const int k = map.source.size();
  // Signatures of target points under the images.
  std::vector<std::uint64_t> tsigs(map.target.ground_size(), 0);
  for (int i = 0; i < k; ++i)
    for (int p : map.images[i].points()) tsigs[p] |= std::uint64_t{1} << i;

  const auto& realized = map.source.realized_signatures();
  auto source_realizes = [&](std::uint64_t s) {
    return std::binary_search(realized.begin(), realized.end(), s);
  };
  for (std::uint64_t s : tsigs)
    if (!source_realizes(s)) return std::nullopt;

  // The extension lives on the subalgebra generated by the family.  Every
  // atom of that closure is a single signature class, and its image is the
  // matching signature class of the target.
  SetAlgebra dom = closure(map.source.algebra().ground_size(), map.source.members());
  const auto& psigs = map.source.point_signatures();
  std::vector<Element> atom_images;
  atom_images.reserve(dom.atom_count());
  for (const auto& atom : dom.atoms()) {
    std::uint64_t sig = psigs[atom.points().front()];
    Element img(map.target.ground_size());
    for (int p = 0; p < map.target.ground_size(); ++p)
      if (tsigs[p] == sig) img.set(p);
    atom_images.push_back(img);
  }
  return Homomorphism(std::move(dom), map.target, std::move(atom_images));
}

namespace {

// DFS over subfamilies whose image meet is still nonzero; a subfamily whose
// image meet vanishes cannot witness a violation, nor can its supersets.
bool preserving_search(const PartialMap& map, int max_size, int start, const Element& img_meet,
                       std::uint64_t mask, int taken) {
  const auto& realized = map.source.realized_signatures();
  if (taken > 0) {
    bool source_zero = true;
    for (std::uint64_t s : realized)
      if ((s & mask) == mask) {
        source_zero = false;
        break;
      }
    if (source_zero) return false;  // zero meet with nonzero image meet
  }
  if (taken == max_size) return true;
  for (int i = start; i < map.source.size(); ++i) {
    Element next = img_meet & map.images[i];
    if (next.empty()) continue;
    if (!preserving_search(map, max_size, i + 1, next, mask | (std::uint64_t{1} << i),
                           taken + 1))
      return false;
  }
  return true;
}

}  // namespace

bool is_n_preserving(const PartialMap& map, Degree n) {
  const int max_size = n.is_omega() ? map.source.size() : std::min(n.value(), map.source.size());
  return preserving_search(map, max_size, 0, map.target.one(), 0, 0);
}

Element apply_hom(const Homomorphism& h, const Element& e) { return h.apply(e); }

}  // namespace freeboole
