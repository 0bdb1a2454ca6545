#include "mmtw/dp.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace mmtw {

namespace detail {

void root_tree(const TreeDecomposition& t, std::vector<std::vector<int>>& children, std::vector<int>& post) {
  const auto adj = t.adjacency();
  const auto n = static_cast<std::size_t>(t.num_nodes());
  children.assign(n, {});
  post.clear();
  std::vector<int> parent(n, -2);
  std::vector<int> order{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = u;
      children[static_cast<std::size_t>(u)].push_back(w);
      order.push_back(w);
    }
  }
  for (auto& c : children) std::sort(c.begin(), c.end());
  // Reverse BFS order visits every child before its parent.
  post.assign(order.rbegin(), order.rend());
}

}  // namespace detail

Rational MwisFunction::weight(const VertexSet& s) const {
  Rational total(0);
  for (int v : s) total += h_.weight(v);
  return total;
}

MwisFunction::Table MwisFunction::leaf_init(const Hypergraph& h, const std::vector<VertexSet>& mis) const {
  Table t{h.vertices(), {}};
  for (const auto& j : mis) t.entries.emplace(j, MwisEntry{weight(j), j});
  return t;
}

MwisFunction::Table MwisFunction::restrict(const Table& t, const VertexSet& s) const {
  Table out{s, {}};
  for (const auto& [a, e] : t.entries) {
    auto [it, fresh] = out.entries.emplace(a & s, e);
    if (!fresh && e.value > it->second.value) it->second = e;
  }
  return out;
}

MwisFunction::Table MwisFunction::add_isolated(const Table& t, int v) const {
  Table out{t.base.with(v), {}};
  for (const auto& [a, e] : t.entries) {
    out.entries.emplace(a.with(v), MwisEntry{e.value + h_.weight(v), e.witness.with(v)});
  }
  return out;
}

MwisFunction::Table MwisFunction::merge(const TraceFamily& tr, const Table& a, const Table& b) const {
  const VertexSet& s = tr.base;
  Table out{s, {}};
  for (const auto& [a1, e1] : a.entries) {
    const Rational w1 = weight(a1);
    for (const auto& [a2, e2] : b.entries) {
      const VertexSet key = a1 & a2;
      if (!tr.contains(key)) continue;
      const Rational value = e1.value + e2.value - w1 - weight(a2) + weight(key);
      MwisEntry e{value, (e1.witness - s) | (e2.witness - s) | key};
      auto [it, fresh] = out.entries.emplace(key, e);
      if (!fresh && value > it->second.value) it->second = std::move(e);
    }
  }
  return out;
}

MwisResult mwis(const Hypergraph& h, const TreeDecomposition& t, const Caps& caps) {
  VertexSet keep;
  for (int v : h.vertices()) {
    if (h.weight(v) >= 0) keep.insert(v);
  }
  const Hypergraph reduced = induced_same_ids(h, keep);
  TreeDecomposition td = t;
  {
    const Validity ok = validate(h, t);
    if (!ok.valid) throw InputError("mwis: " + ok.defect);
  }
  for (auto& b : td.bags) b &= keep;
  const MwisFunction f(reduced);
  const auto table = run_dp(reduced, td, f, caps);
  MwisResult out;
  auto it = table.entries.find(VertexSet{});
  if (it == table.entries.end()) return out;
  out.feasible = true;
  out.value = it->second.value;
  out.witness = it->second.witness;
  return out;
}

CoverFunction CoverFunction::colouring(int k, const Caps& caps) {
  CoverFunction f;
  f.arity_ = k;
  f.symmetric_ = true;
  f.caps_ = caps;
  return f;
}

CoverFunction CoverFunction::homomorphism(const std::vector<VertexSet>& target_mis, int target_vertices,
                                          const Caps& caps) {
  CoverFunction f;
  f.arity_ = static_cast<int>(target_mis.size());
  f.symmetric_ = false;
  f.caps_ = caps;
  for (int x = 0; x < target_vertices; ++x) {
    VertexSet group;
    for (std::size_t i = 0; i < target_mis.size(); ++i) {
      if (target_mis[i].contains(x)) group.insert(static_cast<int>(i));
    }
    f.groups_.push_back(group);
  }
  return f;
}

bool CoverFunction::covers(const Tuple& a, const VertexSet& s) const {
  if (symmetric_) {
    VertexSet u;
    for (const auto& x : a) u |= x;
    return s.is_subset_of(u);
  }
  VertexSet u;
  for (const auto& group : groups_) {
    VertexSet inter = s;
    for (int i : group) inter &= a[static_cast<std::size_t>(i)];
    u |= inter;
  }
  return s.is_subset_of(u);
}

void CoverFunction::canonical(Tuple& a) const {
  if (symmetric_) std::sort(a.begin(), a.end());
}

void CoverFunction::finish(Table& t) const {
  std::sort(t.generators.begin(), t.generators.end());
  t.generators.erase(std::unique(t.generators.begin(), t.generators.end()), t.generators.end());
  std::vector<Tuple> kept;
  for (const auto& g : t.generators) {
    const bool dominated = std::any_of(t.generators.begin(), t.generators.end(), [&](const Tuple& o) {
      if (o == g) return false;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_subset_of(o[i])) return false;
      }
      return true;
    });
    if (!dominated) kept.push_back(g);
  }
  t.generators = std::move(kept);
}

namespace {

// Calls visit on every tuple over `lists` (non-decreasing indices when `nondecreasing`).
void for_each_tuple(const std::vector<std::vector<VertexSet>>& lists, bool nondecreasing,
                    const std::function<void(const std::vector<VertexSet>&)>& visit) {
  const std::size_t p = lists.size();
  std::vector<VertexSet> current(p);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) {
    if (i == p) {
      visit(current);
      return;
    }
    for (std::size_t j = nondecreasing ? from : 0; j < lists[i].size(); ++j) {
      current[i] = lists[i][j];
      rec(i + 1, j);
    }
  };
  rec(0, 0);
}

}  // namespace

CoverFunction::Table CoverFunction::leaf_init(const Hypergraph& h, const std::vector<VertexSet>& mis) const {
  Table t{h.vertices(), {}};
  const std::vector<std::vector<VertexSet>> lists(static_cast<std::size_t>(arity_), mis);
  std::uint64_t visited = 0;
  for_each_tuple(lists, symmetric_, [&](const Tuple& a) {
    if (++visited > caps_.enumeration) throw ResourceError("cover table: enumeration cap exceeded", visited);
    if (!covers(a, t.base)) return;
    t.generators.push_back(a);
    if (t.generators.size() > caps_.table) throw ResourceError("cover table: table cap exceeded", visited);
  });
  finish(t);
  return t;
}

CoverFunction::Table CoverFunction::restrict(const Table& t, const VertexSet& s) const {
  Table out{s, {}};
  for (const auto& g : t.generators) {
    Tuple a = g;
    for (auto& x : a) x &= s;
    canonical(a);
    out.generators.push_back(std::move(a));
  }
  finish(out);
  return out;
}

CoverFunction::Table CoverFunction::add_isolated(const Table& t, int v) const {
  Table out{t.base.with(v), {}};
  for (const auto& g : t.generators) {
    Tuple a = g;
    for (auto& x : a) x.insert(v);
    canonical(a);
    out.generators.push_back(std::move(a));
  }
  finish(out);
  return out;
}

CoverFunction::Table CoverFunction::merge(const TraceFamily& tr, const Table& a, const Table& b) const {
  const VertexSet& s = tr.base;
  Table out{s, {}};
  std::map<VertexSet, std::vector<VertexSet>> below_cache;
  auto maximal_below = [&](const VertexSet& m) -> const std::vector<VertexSet>& {
    auto it = below_cache.find(m);
    if (it != below_cache.end()) return it->second;
    std::vector<VertexSet> inside;
    for (const auto& x : tr.members) {
      if (x.is_subset_of(m)) inside.push_back(x);
    }
    std::vector<VertexSet> maximal;
    for (const auto& x : inside) {
      const bool dominated =
          std::any_of(inside.begin(), inside.end(), [&](const VertexSet& y) { return y != x && x.is_subset_of(y); });
      if (!dominated) maximal.push_back(x);
    }
    return below_cache.emplace(m, std::move(maximal)).first->second;
  };
  std::vector<int> perm(static_cast<std::size_t>(arity_));
  std::set<Tuple> produced;
  std::uint64_t visited = 0;
  for (const auto& g1 : a.generators) {
    for (const auto& g2 : b.generators) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::vector<VertexSet>> lists(static_cast<std::size_t>(arity_));
        bool empty = false;
        for (std::size_t i = 0; i < lists.size() && !empty; ++i) {
          lists[i] = maximal_below(g1[i] & g2[static_cast<std::size_t>(perm[i])]);
          empty = lists[i].empty();
        }
        if (!empty) {
          for_each_tuple(lists, false, [&](const Tuple& t) {
            if (++visited > caps_.enumeration) throw ResourceError("cover merge: enumeration cap exceeded", visited);
            if (!covers(t, s)) return;
            Tuple c = t;
            canonical(c);
            produced.insert(std::move(c));
            if (produced.size() > caps_.table) throw ResourceError("cover merge: table cap exceeded", visited);
          });
        }
      } while (symmetric_ && std::next_permutation(perm.begin(), perm.end()));
    }
  }
  out.generators.assign(produced.begin(), produced.end());
  finish(out);
  return out;
}

std::vector<CoverFunction::Tuple> CoverFunction::expand(const Table& t, const TraceFamily& tr) const {
  std::vector<Tuple> out;
  const std::vector<std::vector<VertexSet>> lists(static_cast<std::size_t>(arity_), tr.members);
  for_each_tuple(lists, symmetric_, [&](const Tuple& a) {
    if (!covers(a, tr.base)) return;
    const bool below = std::any_of(t.generators.begin(), t.generators.end(), [&](const Tuple& g) {
      if (!symmetric_) {
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (!a[i].is_subset_of(g[i])) return false;
        }
        return true;
      }
      std::vector<int> perm(a.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i].is_subset_of(g[static_cast<std::size_t>(perm[i])]);
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    });
    if (below) out.push_back(a);
  });
  return out;
}

bool chromatic_decide(const Hypergraph& h, int k, const TreeDecomposition& t, const Caps& caps) {
  if (k < 1) throw InputError("chromatic_decide: k must be at least 1");
  const auto table = run_dp(h, t, CoverFunction::colouring(k, caps), caps);
  return !table.generators.empty();
}

bool hom_decide(const Hypergraph& h, const Hypergraph& f, const TreeDecomposition& t, const Caps& caps) {
  if (h.num_edges() > 0) {
    const int r = h.rank();
    if (!h.is_uniform(r) || !f.is_uniform(r)) throw InputError("hom_decide: H and F must be r-uniform for one r");
  }
  if (f.num_vertices() > caps.hom_target_vertices) {
    throw ResourceError("hom_decide: target has more than " + std::to_string(caps.hom_target_vertices) + " vertices");
  }
  if (f.num_vertices() == 0) return h.num_vertices() == 0;
  // Renumber F densely so coordinate groups line up with its vertices.
  const Reindexed fr = induced(f, f.vertices());
  const auto target_mis = enumerate_mis(fr.graph, caps.hom_target_vertices);
  const auto table = run_dp(h, t, CoverFunction::homomorphism(target_mis, fr.graph.num_vertices(), caps), caps);
  return !table.generators.empty();
}

}  // namespace mmtw
