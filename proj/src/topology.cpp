#include "freeboole/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace freeboole {

namespace {

// Whether a family known to be n-linked stays n-linked with one candidate
// more.  While the extended family has at most n sets its whole meet carries
// the condition; beyond that, the new size-n subfamilies are the ones through
// the candidate.
bool stays_n_linked(const std::vector<Element>& sets, const std::vector<int>& family,
                    const Element& family_meet, int candidate, int n) {
  if (static_cast<int>(family.size()) + 1 <= n)
    return family_meet.intersects(sets[candidate]);
  const int need = n - 1;
  auto rec = [&](auto&& self, int start, int remaining, Element meet) -> bool {
    if (remaining == 0) return meet.intersects(sets[candidate]);
    for (int i = start; i <= static_cast<int>(family.size()) - remaining; ++i) {
      if (!self(self, i + 1, remaining - 1, meet & sets[family[i]])) return false;
    }
    return true;
  };
  return rec(rec, 0, need, Element::full(sets[candidate].ground_size()));
}

}  // namespace

bool is_n_linked(const std::vector<Element>& sets, int n) {
  if (n < 1) throw PreconditionError("linkedness degree must be >= 1");
  const int k = static_cast<int>(sets.size());
  if (k == 0) return true;
  const int take = std::min(k, n);
  auto rec = [&](auto&& self, int start, int remaining, Element meet) -> bool {
    if (remaining == 0) return !meet.empty();
    for (int i = start; i <= k - remaining; ++i)
      if (!self(self, i + 1, remaining - 1, meet & sets[i])) return false;
    return true;
  };
  return rec(rec, 0, take, Element::full(sets.front().ground_size()));
}

NaryResult is_n_ary(const SubbaseFamily& subbase, int n, std::uint64_t subset_budget) {
  if (n < 1) throw PreconditionError("arity degree must be >= 1");
  const int k = static_cast<int>(subbase.sets.size());
  NaryResult out;
  out.is_nary = true;
  if (k == 0) return out;

  std::uint64_t visited = 0;
  std::vector<int> family;
  // DFS over n-linked subfamilies in lexicographic order.  Extending an
  // n-linked family that already fails to intersect preserves the failure, so
  // only subset-maximal n-linked families are tested; the first failing one
  // is the least.
  auto dfs = [&](auto&& self, int start, const Element& meet) -> bool {
    if (++visited > subset_budget)
      throw BudgetError("n-ary check budget of " + std::to_string(subset_budget) +
                        " subfamilies exceeded");
    bool maximal = true;
    for (int c = 0; c < k; ++c) {
      if (std::binary_search(family.begin(), family.end(), c)) continue;
      if (stays_n_linked(subbase.sets, family, meet, c, n)) {
        maximal = false;
        break;
      }
    }
    if (maximal && !family.empty() && meet.empty()) {
      out.is_nary = false;
      out.counterexample = family;
      return true;
    }
    for (int i = start; i < k; ++i) {
      if (!stays_n_linked(subbase.sets, family, meet, i, n)) continue;
      family.push_back(i);
      bool done = self(self, i + 1, meet & subbase.sets[i]);
      family.pop_back();
      if (done) return true;
    }
    return false;
  };
  dfs(dfs, 0, Element::full(subbase.point_count));
  return out;
}

namespace {

SubbaseFamily subbase_from_index(const AnticliqueIndex& index) {
  SubbaseFamily out;
  out.point_count = index.count();
  for (int v = 0; v < index.vertex_count; ++v) {
    Element plus(out.point_count), minus(out.point_count);
    for (int p = 0; p < out.point_count; ++p) {
      if ((index.sets[p] >> v) & 1)
        plus.set(p);
      else
        minus.set(p);
    }
    out.sets.push_back(plus);
    out.labels.push_back("v" + std::to_string(v + 1) + "+");
    out.sets.push_back(minus);
    out.labels.push_back("v" + std::to_string(v + 1) + "-");
  }
  return out;
}

}  // namespace

SubbaseFamily canonical_subbase(const Graph& g, std::uint64_t cap) {
  return subbase_from_index(enumerate_anticliques(g, cap));
}

SubbaseFamily canonical_subbase(const Hypergraph& h, std::uint64_t cap) {
  return subbase_from_index(enumerate_anticliques(h, cap));
}

namespace {

int cmpn_upper_on(const SubbaseFamily& subbase, int bound, std::uint64_t subset_budget) {
  for (int n = 2; n <= bound; ++n)
    if (is_n_ary(subbase, n, subset_budget).is_nary) return n;
  throw std::logic_error("canonical subbase exceeded its arity bound of " +
                         std::to_string(bound));
}

}  // namespace

int cmpn_upper(const Graph& g, std::uint64_t cap, std::uint64_t subset_budget) {
  return cmpn_upper_on(canonical_subbase(g, cap), 2, subset_budget);
}

int cmpn_upper(const Hypergraph& h, std::uint64_t cap, std::uint64_t subset_budget) {
  int max_edge = 2;
  for (auto e : h.edge_masks()) max_edge = std::max(max_edge, std::popcount(e));
  return cmpn_upper_on(canonical_subbase(h, cap), max_edge, subset_budget);
}

SubbaseFamily disjoint_union_nary(const SubbaseFamily& s, const SubbaseFamily& t, int n,
                                  std::uint64_t subset_budget) {
  if (!is_n_ary(s, n, subset_budget).is_nary || !is_n_ary(t, n, subset_budget).is_nary)
    throw PreconditionError("both subbases must be " + std::to_string(n) + "-ary");

  SubbaseFamily out;
  out.point_count = s.point_count + t.point_count;
  auto lift = [&](const SubbaseFamily& from, int offset, const std::string& prefix) {
    for (std::size_t i = 0; i < from.sets.size(); ++i) {
      Element e(out.point_count);
      for (int p : from.sets[i].points()) e.set(offset + p);
      out.sets.push_back(e);
      out.labels.push_back(prefix + from.labels[i]);
    }
  };
  lift(s, 0, "L.");
  lift(t, s.point_count, "R.");
  // The two whole blocks; an empty factor contributes nothing and leaves the
  // other side's behavior unchanged.
  if (s.point_count > 0) {
    Element block(out.point_count);
    for (int p = 0; p < s.point_count; ++p) block.set(p);
    out.sets.push_back(block);
    out.labels.push_back("L.space");
  }
  if (t.point_count > 0) {
    Element block(out.point_count);
    for (int p = 0; p < t.point_count; ++p) block.set(s.point_count + p);
    out.sets.push_back(block);
    out.labels.push_back("R.space");
  }

  if (!is_n_ary(out, n, subset_budget).is_nary)
    throw std::logic_error("disjoint union of n-ary subbases failed to be n-ary");
  return out;
}

}  // namespace freeboole
