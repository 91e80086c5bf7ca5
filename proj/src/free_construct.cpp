#include "freeboole/free_construct.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace freeboole {

namespace {

StructureAlgebra algebra_from_index(AnticliqueIndex index) {
  const int points = index.count();
  std::vector<Element> vplus;
  vplus.reserve(index.vertex_count);
  for (int v = 0; v < index.vertex_count; ++v) {
    Element e(points);
    for (int p = 0; p < points; ++p)
      if ((index.sets[p] >> v) & 1) e.set(p);
    vplus.push_back(e);
  }
  SetAlgebra algebra = closure(points, vplus);
  GeneratorFamily family(algebra, vplus);
  return StructureAlgebra{std::move(algebra), std::move(family), std::move(index)};
}

void check_family_budget(const GeneratorFamily& family, int member_budget) {
  if (family.size() > member_budget)
    throw BudgetError("family of size " + std::to_string(family.size()) +
                      " exceeds the member budget of " + std::to_string(member_budget));
}

bool has_superset_in_realized(const std::vector<std::uint64_t>& realized, std::uint64_t s) {
  for (auto r : realized)
    if ((r & s) == s) return true;
  return false;
}

}  // namespace

StructureAlgebra anticlique_algebra(const Graph& g, std::uint64_t cap) {
  return algebra_from_index(enumerate_anticliques(g, cap));
}

StructureAlgebra anticlique_algebra(const Hypergraph& h, std::uint64_t cap) {
  return algebra_from_index(enumerate_anticliques(h, cap));
}

StructureAlgebra clique_algebra(const Graph& g, std::uint64_t cap) {
  return anticlique_algebra(complement(g), cap);
}

IndependenceReport independence_report(const GeneratorFamily& family, int member_budget) {
  check_family_budget(family, member_budget);
  IndependenceReport report;

  // Reduced criterion: the family is omega-independent iff for every subset S
  // with nonzero meet, the elementary product with all other members
  // complemented is nonzero as well.  On point signatures this says the set
  // of realized signatures is closed under removing one member, which is
  // equivalent to closure under taking arbitrary subsets.
  const auto& realized = family.realized_signatures();
  std::set<std::vector<int>> witnesses;
  for (std::uint64_t sig : realized) {
    std::uint64_t bits = sig;
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      std::uint64_t sub = sig & ~(std::uint64_t{1} << b);
      if (!std::binary_search(realized.begin(), realized.end(), sub)) {
        std::vector<int> subset;
        for (int i = 0; i < family.size(); ++i)
          if ((sub >> i) & 1) subset.push_back(i);
        witnesses.insert(std::move(subset));
      }
    }
  }
  report.omega_independent = witnesses.empty();
  for (const auto& w : witnesses)
    report.violations.push_back(
        {w.empty() ? IndependenceViolation::Kind::sum_is_one
                   : IndependenceViolation::Kind::covered_by_rest,
         w});
  std::sort(report.violations.begin(), report.violations.end(),
            [](const IndependenceViolation& a, const IndependenceViolation& b) {
              if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
              return a.subset < b.subset;
            });

  if (report.omega_independent) {
    std::size_t worst = 1;
    for (const auto& z : minimal_zero_sets(family, member_budget))
      worst = std::max(worst, z.size());
    report.degree = Degree::finite(static_cast<int>(worst));
  }
  return report;
}

std::vector<std::vector<int>> minimal_zero_sets(const GeneratorFamily& family,
                                                int member_budget) {
  check_family_budget(family, member_budget);
  const int k = family.size();
  const auto& realized = family.realized_signatures();
  std::vector<std::uint64_t> found_masks;
  std::vector<std::vector<int>> found;

  std::vector<int> combo;
  // Increasing-cardinality search; supersets of a found zero set are skipped,
  // so everything recorded is subset-minimal.
  auto extend = [&](auto&& self, int start, int remaining, std::uint64_t mask) -> void {
    if (remaining == 0) {
      for (auto f : found_masks)
        if ((mask & f) == f) return;
      if (!has_superset_in_realized(realized, mask)) {
        found_masks.push_back(mask);
        found.push_back(combo);
      }
      return;
    }
    for (int i = start; i <= k - remaining; ++i) {
      combo.push_back(i);
      self(self, i + 1, remaining - 1, mask | (std::uint64_t{1} << i));
      combo.pop_back();
    }
  };
  for (int size = 1; size <= k; ++size) extend(extend, 0, size, 0);
  return found;
}

PerpHypergraph perp_hypergraph(const GeneratorFamily& family, int member_budget) {
  auto zeros = minimal_zero_sets(family, member_budget);
  std::vector<std::uint64_t> masks;
  masks.reserve(zeros.size());
  for (const auto& z : zeros) {
    std::uint64_t m = 0;
    for (int i : z) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  return PerpHypergraph{Hypergraph(family.size(), std::move(masks)), family};
}

bool generator_correspondence_isomorphism(const GeneratorFamily& a, const GeneratorFamily& b) {
  if (a.size() != b.size()) return false;
  auto fwd = sikorski_extends(PartialMap(a, b.algebra(), b.members()));
  auto bwd = sikorski_extends(PartialMap(b, a.algebra(), a.members()));
  if (!fwd || !bwd) return false;
  for (const auto& atom : a.algebra().atoms())
    if (bwd->apply(fwd->apply(atom)) != atom) return false;
  for (const auto& atom : b.algebra().atoms())
    if (fwd->apply(bwd->apply(atom)) != atom) return false;
  return true;
}

namespace {

bool roundtrip_on(const Hypergraph& h, std::uint64_t cap) {
  StructureAlgebra sa = anticlique_algebra(h, cap);
  PerpHypergraph perp = perp_hypergraph(sa.vertex_family);
  // The vertex map v -> v+ is the identity on indices, so isomorphism with
  // the original structure is equality of edge sets.
  if (perp.hypergraph.edge_masks() != h.edge_masks()) return false;
  // Algebra-side round trip: the original vertex family and the one of the
  // rebuilt algebra correspond through a two-way extension.
  StructureAlgebra back = anticlique_algebra(perp.hypergraph, cap);
  return generator_correspondence_isomorphism(sa.vertex_family, back.vertex_family);
}

}  // namespace

bool roundtrip_check(const Graph& g, std::uint64_t cap) {
  return roundtrip_on(Hypergraph::from_graph(g), cap);
}

bool roundtrip_check(const Hypergraph& h, std::uint64_t cap) {
  if (!h.normalized())
    throw PreconditionError("round trip requires a normalized hypergraph (no edge inside another)");
  return roundtrip_on(h, cap);
}

Homomorphism extend_n_preserving(const GeneratorFamily& family, const SetAlgebra& target,
                                 const std::vector<Element>& images, Degree n) {
  if (!family.generates())
    throw PreconditionError("family does not generate its algebra");
  IndependenceReport report = independence_report(family);
  if (!report.omega_independent || !(*report.degree <= n))
    throw PreconditionError("family is not " + n.to_string() + "-independent");
  PartialMap map(family, target, images);
  if (!is_n_preserving(map, n))
    throw PreconditionError("map is not " + n.to_string() + "-preserving");
  auto hom = sikorski_extends(map);
  if (!hom)
    throw std::logic_error("extension of an n-preserving map on an n-independent family failed");
  return *hom;
}

namespace {

// Independence data for a candidate family given as atom masks inside a
// powerset of `points` atoms.  Signatures are masks over the family.
struct MaskFamily {
  std::vector<std::uint64_t> members;  // one mask of atoms per member
  int points;

  bool generates() const {
    std::set<std::uint64_t> sigs;
    for (int p = 0; p < points; ++p) sigs.insert(signature(p));
    return static_cast<int>(sigs.size()) == points;
  }

  std::uint64_t signature(int p) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((members[i] >> p) & 1) s |= std::uint64_t{1} << i;
    return s;
  }

  // Least degree if omega-independent, absent otherwise.
  std::optional<int> degree() const {
    std::vector<std::uint64_t> realized;
    realized.reserve(points);
    for (int p = 0; p < points; ++p) realized.push_back(signature(p));
    std::sort(realized.begin(), realized.end());
    realized.erase(std::unique(realized.begin(), realized.end()), realized.end());
    for (std::uint64_t sig : realized) {
      std::uint64_t bits = sig;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        if (!std::binary_search(realized.begin(), realized.end(),
                                sig & ~(std::uint64_t{1} << b)))
          return std::nullopt;
      }
    }
    // Max size of a subset-minimal zero set; 1 when there are none.
    const int k = static_cast<int>(members.size());
    int worst = 1;
    std::vector<std::uint64_t> zero_masks;
    std::vector<int> combo;
    auto extend = [&](auto&& self, int start, int remaining, std::uint64_t mask) -> void {
      if (remaining == 0) {
        for (auto f : zero_masks)
          if ((mask & f) == f) return;
        if (!has_superset_in_realized(realized, mask)) {
          zero_masks.push_back(mask);
          worst = std::max<int>(worst, std::popcount(mask));
        }
        return;
      }
      for (int i = start; i <= k - remaining; ++i)
        self(self, i + 1, remaining - 1, mask | (std::uint64_t{1} << i));
    };
    for (int size = 2; size <= k; ++size) extend(extend, 0, size, 0);
    return worst;
  }
};

}  // namespace

std::optional<Degree> freeness_degree_of_algebra(const SetAlgebra& a,
                                                 const DegreeSearchBudget& budget) {
  const int t = a.atom_count();
  if (t >= 64 || (std::uint64_t{1} << t) > budget.max_algebra_size)
    throw BudgetError("algebra size exceeds the search budget of " +
                      std::to_string(budget.max_algebra_size) + " elements");

  // Work inside the powerset of the atoms; the answer only depends on the
  // Boolean structure.  Candidates are the nonzero elements other than 1.
  std::vector<std::uint64_t> candidates;
  const std::uint64_t full = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t m = 1; m < full; ++m) candidates.push_back(m);
  if (t == 1) {
    // {0,1}: generated by the empty family, which is vacuously independent.
    return Degree::finite(1);
  }

  int best = 0;  // 0 = none found yet
  const bool atoms_power_of_two = std::has_single_bit(static_cast<unsigned>(t));
  const int log_atoms = std::bit_width(static_cast<unsigned>(t)) - 1;
  std::uint64_t scanned = 0;

  MaskFamily fam{{}, t};
  auto search = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) {
      if (++scanned > budget.max_subsets)
        throw BudgetError("degree search budget of " + std::to_string(budget.max_subsets) +
                          " subsets exhausted; best degree so far: " +
                          (best ? std::to_string(best) : std::string("none")));
      if (!fam.generates()) return false;
      auto deg = fam.degree();
      if (deg && (best == 0 || *deg < best)) best = *deg;
      return best == 1;
    }
    for (std::size_t i = start; i + remaining <= candidates.size() + 0u; ++i) {
      fam.members.push_back(candidates[i]);
      bool done = self(self, i + 1, remaining - 1);
      fam.members.pop_back();
      if (done) return true;
    }
    return false;
  };

  for (int size = 1; size <= static_cast<int>(candidates.size()); ++size) {
    if (search(search, 0, size)) break;
    // An independent generating set exists only when the atom count is a
    // power of two, and then it has size exactly log2(atom count).  Once the
    // search has passed that size a best of 2 cannot improve.
    if (best == 2 && (!atoms_power_of_two || size >= log_atoms)) break;
    if (best == 1) break;
  }
  if (best == 0) return std::nullopt;
  return Degree::finite(best);
}

std::vector<Element> semigroup_closure(const GeneratorFamily& family, std::size_t size_budget) {
  std::set<Element> closed(family.members().begin(), family.members().end());
  std::vector<Element> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Element> fresh;
    for (const auto& f : frontier)
      for (const auto& m : family.members()) {
        Element p = f & m;
        if (closed.insert(p).second) {
          fresh.push_back(p);
          if (closed.size() > size_budget)
            throw BudgetError("semigroup closure exceeds the size budget of " +
                              std::to_string(size_budget));
        }
      }
    frontier = std::move(fresh);
  }
  closed.insert(family.algebra().zero());
  closed.insert(family.algebra().one());
  return std::vector<Element>(closed.begin(), closed.end());
}

bool is_disjunctive(const std::vector<Element>& h, std::uint64_t subset_budget) {
  if (h.empty()) return true;
  const int ground = h.front().ground_size();
  std::vector<Element> members;
  std::set<Element> seen;
  for (const auto& e : h) {
    if (e.ground_size() != ground) throw DimensionError("mixed grounds in disjunctive check");
    if (e.empty()) throw PreconditionError("disjunctive check requires nonzero elements");
    if (seen.insert(e).second) members.push_back(e);
  }
  const int k = static_cast<int>(members.size());
  if (k > 62 || (std::uint64_t{1} << k) > subset_budget)
    throw BudgetError("disjunctive check budget of " + std::to_string(subset_budget) +
                      " subsets exceeded");

  GeneratorFamily family(closure(ground, members), members);
  const auto& realized = family.realized_signatures();
  // For each target point (an element m of M), its signature under the images
  // g -> M down g is the set of members above m, independently of M.
  std::vector<std::uint64_t> above(k, 0);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      if (members[j].subset_of(members[i])) above[j] |= std::uint64_t{1} << i;

  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    std::uint64_t bits = m;
    while (bits) {
      int j = std::countr_zero(bits);
      bits &= bits - 1;
      if (!std::binary_search(realized.begin(), realized.end(), above[j])) return false;
    }
  }
  return true;
}

std::optional<Homomorphism> poset_morphism_hom(const std::vector<int>& f, const Poset& p,
                                               const Poset& q) {
  if (f.size() != static_cast<std::size_t>(p.element_count()))
    throw PreconditionError("map must be total on the source poset");
  for (int img : f)
    if (img < 0 || img >= q.element_count())
      throw DimensionError("map image outside the target poset");
  for (int u = 0; u < p.element_count(); ++u)
    for (int v = 0; v < p.element_count(); ++v)
      if (p.less(u, v) && !q.less(f[u], f[v]))
        throw PreconditionError("map is not strictly order-preserving");

  StructureAlgebra src = anticlique_algebra(comparability_graph(p));
  StructureAlgebra dst = anticlique_algebra(comparability_graph(q));
  std::vector<Element> images;
  images.reserve(f.size());
  for (int img : f) images.push_back(dst.vertex_family.members()[img]);
  PartialMap map(src.vertex_family, dst.algebra, images);
  if (!is_n_preserving(map, Degree::finite(2))) return std::nullopt;
  return sikorski_extends(map);
}

}  // namespace freeboole
