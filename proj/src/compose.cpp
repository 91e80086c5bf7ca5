#include "freeboole/compose.hpp"

#include <random>
#include <string>

namespace freeboole {

Element DirectProduct::embed(int factor, const Element& e) const {
  const SetAlgebra& f = factors.at(factor);
  if (e.ground_size() != f.ground_size())
    throw DimensionError("element does not live in the chosen factor");
  Element out(algebra.ground_size());
  for (int p : e.points()) out.set(offsets[factor] + p);
  return out;
}

Element DirectProduct::block(int factor) const {
  return embed(factor, factors.at(factor).one());
}

DirectProduct direct_product(const std::vector<SetAlgebra>& algebras, int ground_budget) {
  if (algebras.empty()) throw PreconditionError("product of no algebras");
  int total = 0;
  for (const auto& a : algebras) total += a.ground_size();
  if (total > ground_budget)
    throw BudgetError("product ground of " + std::to_string(total) +
                      " points exceeds the budget of " + std::to_string(ground_budget));

  DirectProduct out{SetAlgebra(1, {}), algebras, {}};
  std::vector<Element> generators;
  int offset = 0;
  for (const auto& a : algebras) {
    out.offsets.push_back(offset);
    for (const auto& atom : a.atoms()) {
      Element g(total);
      for (int p : atom.points()) g.set(offset + p);
      generators.push_back(g);
    }
    offset += a.ground_size();
  }
  out.algebra = closure(total, std::move(generators));
  return out;
}

EmbeddedFamily embedded_product_family(const std::vector<GeneratorFamily>& families,
                                       int ground_budget) {
  std::vector<SetAlgebra> algebras;
  algebras.reserve(families.size());
  for (const auto& f : families) algebras.push_back(f.algebra());
  DirectProduct product = direct_product(algebras, ground_budget);

  std::vector<Element> members;
  std::vector<std::pair<int, int>> provenance;
  for (std::size_t i = 0; i < families.size(); ++i)
    for (int j = 0; j < families[i].size(); ++j) {
      members.push_back(product.embed(static_cast<int>(i), families[i].members()[j]));
      provenance.emplace_back(static_cast<int>(i), j);
    }
  GeneratorFamily family(product.algebra, std::move(members));
  return EmbeddedFamily{std::move(product), std::move(family), std::move(provenance)};
}

Element FreeProduct::embed(int factor, const Element& e) const {
  const SetAlgebra& f = factors.at(factor);
  if (!f.contains(e)) throw MembershipError("element does not belong to the chosen factor");
  Element out(algebra.ground_size());
  const int tuples = algebra.ground_size();
  const int atoms = f.atom_count();
  for (int t = 0; t < tuples; ++t) {
    int coord = static_cast<int>((t / strides[factor]) % atoms);
    if (f.atoms()[coord].subset_of(e)) out.set(t);
  }
  return out;
}

FreeProduct free_product(const std::vector<SetAlgebra>& algebras, std::uint64_t ground_budget) {
  if (algebras.empty()) throw PreconditionError("free product of no algebras");
  std::uint64_t tuples = 1;
  for (const auto& a : algebras) {
    tuples *= static_cast<std::uint64_t>(a.atom_count());
    if (tuples > ground_budget)
      throw BudgetError("free product ground exceeds the budget of " +
                        std::to_string(ground_budget) + " tuples");
  }

  FreeProduct out{SetAlgebra(1, {}), algebras, std::vector<std::uint64_t>(algebras.size(), 1)};
  for (std::size_t i = algebras.size() - 1; i > 0; --i)
    out.strides[i - 1] = out.strides[i] * algebras[i].atom_count();

  const int ground = static_cast<int>(tuples);
  std::vector<Element> generators;
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (const auto& gen : algebras[i].generators()) {
      Element g(ground);
      for (int t = 0; t < ground; ++t) {
        int coord = static_cast<int>((t / out.strides[i]) % algebras[i].atom_count());
        if (algebras[i].atoms()[coord].subset_of(gen)) g.set(t);
      }
      generators.push_back(g);
    }
  out.algebra = closure(ground, std::move(generators));

  // Independence of the embedded subalgebras: the meet of one atom embedding
  // per factor is the single matching tuple, hence nonzero.  Checked tuple by
  // tuple while the ground is small; beyond that the stride layout already
  // makes coordinates unique.
  if (ground <= 4096) {
    for (int t = 0; t < ground; ++t) {
      Element meet = out.algebra.one();
      for (std::size_t i = 0; i < algebras.size(); ++i) {
        int coord = static_cast<int>((t / out.strides[i]) % algebras[i].atom_count());
        meet = meet & out.embed(static_cast<int>(i), algebras[i].atoms()[coord]);
      }
      if (meet != Element::singleton(ground, t))
        throw std::logic_error("free product embeddings are not independent");
    }
  }
  return out;
}

namespace {

// Sampled universal property: random 2-preserving assignments on the factor
// vertex families that agree on the shared vertices must extend jointly from
// the glued family.
bool sample_joint_extensions(const AmalgamatedFreeProduct& afp, const std::vector<Graph>& graphs,
                             int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Graph& glued = afp.glued.graph;
  const int n = glued.vertex_count();
  for (int s = 0; s < samples; ++s) {
    const int target_points = 1 + static_cast<int>(rng() % 3);
    SetAlgebra target = powerset(target_points);
    // Draw images per glued vertex; factor restrictions then agree on the
    // shared part by construction.  Retry until every factor restriction is
    // 2-preserving, flipping offending images to 0.
    std::vector<Element> images;
    images.reserve(n);
    for (int v = 0; v < n; ++v)
      images.push_back(Element::from_mask(target_points,
                                          rng() & ((std::uint64_t{1} << target_points) - 1)));
    for (auto [u, v] : glued.edges())
      if (images[u].intersects(images[v])) images[v] = Element(target_points);

    bool all_preserving = true;
    for (std::size_t i = 0; i < graphs.size() && all_preserving; ++i) {
      StructureAlgebra fa = anticlique_algebra(graphs[i]);
      std::vector<Element> fimages;
      for (int v = 0; v < graphs[i].vertex_count(); ++v)
        fimages.push_back(images[afp.glued.factor_vertex_map[i][v]]);
      PartialMap pm(fa.vertex_family, target, fimages);
      if (!is_n_preserving(pm, Degree::finite(2))) all_preserving = false;
    }
    if (!all_preserving) continue;

    PartialMap joint(afp.family, target, images);
    if (!sikorski_extends(joint)) return false;
  }
  return true;
}

}  // namespace

AmalgamatedFreeProduct amalgamated_free_product_via_graphs(const std::vector<Graph>& graphs,
                                                           const SharedEmbedding& shared,
                                                           std::uint64_t cap,
                                                           int universal_samples,
                                                           std::uint64_t seed) {
  AmalgamatedUnion glued = amalgamated_union(graphs, shared);
  StructureAlgebra sa = anticlique_algebra(glued.graph, cap);
  AmalgamatedFreeProduct out{std::move(glued), std::move(sa.algebra), std::move(sa.vertex_family)};

  IndependenceReport rep = independence_report(out.family);
  if (!rep.omega_independent || !(*rep.degree <= Degree::finite(2)))
    throw std::logic_error("glued vertex family is not 2-independent");
  if (!out.family.generates())
    throw std::logic_error("glued vertex family does not generate");

  // Factor inclusions agree on the subalgebra generated by the shared
  // vertices: each route sends a shared vertex to the same glued v+.
  for (int u = 0; u < shared.shared.vertex_count(); ++u) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      int via = out.glued.factor_vertex_map[i][shared.into_factor[i][u]];
      if (via != u) throw std::logic_error("factor inclusions disagree on a shared vertex");
    }
  }

  if (!sample_joint_extensions(out, graphs, universal_samples, seed))
    throw std::logic_error("a compatible pair of 2-preserving maps failed to extend jointly");
  return out;
}

}  // namespace freeboole
