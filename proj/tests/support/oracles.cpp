#include "oracles.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace mmtw::test {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) {
    if (v >= 32) throw std::invalid_argument("oracle: vertex id too large");
    m |= Mask{1} << v;
  }
  return m;
}

VertexSet from_mask(Mask m) {
  VertexSet s;
  for (int v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1u) s.insert(v);
  }
  return s;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<Mask> edge_masks(const Hypergraph& h) {
  std::vector<Mask> out;
  for (const auto& e : h.edges()) out.push_back(to_mask(e));
  return out;
}

std::vector<Mask> minimal_masks(std::vector<Mask> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Mask> out;
  for (Mask e : edges) {
    bool minimal = true;
    for (Mask f : edges) minimal = minimal && (f == e || !subset(f, e));
    if (minimal) out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  for (Mask m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) {
      if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    }
  }
  return adj;
}

Mask reach_mask(const std::vector<Mask>& adj, Mask from, Mask within) {
  Mask seen = from & within;
  Mask frontier = seen;
  while (frontier != 0) {
    const int v = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    const Mask next = adj[static_cast<std::size_t>(v)] & within & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen;
}

}  // namespace

Hypergraph random_hypergraph(Rng& rng, int n, int m, int max_rank, int min_rank) {
  std::vector<VertexSet> edges;
  if (n > 0) {
    for (int i = 0; i < m; ++i) {
      const int size = rng.uniform(std::min(min_rank, n), std::min(max_rank, n));
      VertexSet e;
      while (e.size() < size) e.insert(rng.uniform(0, n - 1));
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(n, std::move(edges));
}

Clutter random_clutter(Rng& rng, int n, int m, int max_rank) {
  return minimalize(random_hypergraph(rng, n, m, max_rank));
}

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_cobipartite(Rng& rng, int n, double p) {
  Graph g(n);
  std::vector<int> side(static_cast<std::size_t>(n));
  for (auto& s : side) s = rng.coin() ? 1 : 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)] || rng.coin(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

VertexSet random_subset(Rng& rng, const VertexSet& from, double p) {
  VertexSet s;
  for (int v : from) {
    if (rng.coin(p)) s.insert(v);
  }
  return s;
}

TreeDecomposition random_decomposition(Rng& rng, const Hypergraph& h) {
  std::vector<int> order = h.vertices().to_vector();
  std::shuffle(order.begin(), order.end(), rng.engine());
  TreeDecomposition t = from_elimination_order(h, order);
  if (t.num_nodes() == 0) return t;
  for (int i = rng.uniform(0, 2); i > 0 && !t.edges.empty(); --i) {
    const std::size_t pick = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(t.edges.size()) - 1));
    const auto [a, b] = t.edges[pick];
    t.edges.erase(t.edges.begin() + static_cast<std::ptrdiff_t>(pick));
    const int c = t.add_node(t.bags[static_cast<std::size_t>(a)] & t.bags[static_cast<std::size_t>(b)], a);
    t.edges.emplace_back(c, b);
  }
  for (int i = rng.uniform(0, 2); i > 0; --i) {
    const int at = rng.uniform(0, t.num_nodes() - 1);
    t.add_node(random_subset(rng, t.bags[static_cast<std::size_t>(at)]), at);
  }
  std::vector<int> perm(static_cast<std::size_t>(t.num_nodes()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  TreeDecomposition out;
  out.num_vertices = t.num_vertices;
  out.bags.resize(t.bags.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.bags[static_cast<std::size_t>(perm[i])] = t.bags[i];
  for (auto [a, b] : t.edges) out.edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return out;
}

void random_weights(Rng& rng, Hypergraph& h, int lo, int hi) {
  for (int v : h.vertices()) h.set_weight(v, Rational(rng.uniform(lo, hi)));
}

std::vector<VertexSet> all_subsets(const VertexSet& s) {
  const std::vector<int> elems = s.to_vector();
  std::vector<VertexSet> out;
  for (Mask m = 0; m < (Mask{1} << elems.size()); ++m) {
    VertexSet x;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if ((m >> i) & 1u) x.insert(elems[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<VertexSet> oracle_blocker(const Hypergraph& h) {
  const std::vector<Mask> edges = edge_masks(h);
  const Mask cov = to_mask(h.covered());
  std::vector<Mask> hits;
  // Enumerate submasks of the covered set.
  for (Mask t = cov;; t = (t - 1) & cov) {
    bool all = true;
    for (Mask e : edges) all = all && (e & t) != 0;
    if (all) hits.push_back(t);
    if (t == 0) break;
  }
  return sorted_sets(minimal_masks(hits));
}

std::vector<VertexSet> oracle_mis(const Hypergraph& h) {
  const std::vector<Mask> edges = edge_masks(h);
  const Mask all = to_mask(h.vertices());
  auto independent = [&](Mask s) {
    for (Mask e : edges) {
      if (subset(e, s)) return false;
    }
    return true;
  };
  std::vector<Mask> out;
  for (Mask s = all;; s = (s - 1) & all) {
    if (independent(s)) {
      bool maximal = true;
      for (Mask rest = all & ~s; rest != 0 && maximal; rest &= rest - 1) {
        maximal = !independent(s | (rest & (~rest + 1)));
      }
      if (maximal) out.push_back(s);
    }
    if (s == 0) break;
  }
  return sorted_sets(out);
}

std::vector<VertexSet> oracle_trace(const std::vector<VertexSet>& family, const VertexSet& s) {
  std::set<VertexSet> out;
  for (const auto& f : family) out.insert(f & s);
  return {out.begin(), out.end()};
}

int oracle_alpha(const Graph& g, const VertexSet& s) {
  const auto adj = adjacency_masks(g);
  const Mask sm = to_mask(s);
  int best = 0;
  for (Mask x = sm;; x = (x - 1) & sm) {
    bool ok = true;
    for (Mask r = x; r != 0 && ok; r &= r - 1) ok = (adj[static_cast<std::size_t>(__builtin_ctz(r))] & x) == 0;
    if (ok) best = std::max(best, __builtin_popcount(x));
    if (x == 0) break;
  }
  return best;
}

int oracle_rho(const Hypergraph& h, const VertexSet& s) {
  const std::vector<Mask> edges = edge_masks(h);
  const Mask sm = to_mask(s);
  Mask cov = 0;
  for (Mask e : edges) cov |= e;
  if (!subset(sm, cov)) return kInfinite;
  // Exhaustive over which edge covers the lowest uncovered vertex, memoized on the uncovered rest.
  std::unordered_map<Mask, int> memo;
  std::function<int(Mask)> cover = [&](Mask rest) -> int {
    if (rest == 0) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const Mask low = rest & (~rest + 1);
    int best = kInfinite;
    for (Mask e : edges) {
      if ((e & low) != 0) best = std::min(best, 1 + cover(rest & ~e));
    }
    memo.emplace(rest, best);
    return best;
  };
  return cover(sm);
}

int oracle_induced_matching(const Graph& g, const VertexSet& s) {
  const auto adj = adjacency_masks(g);
  const Mask sm = to_mask(s);
  std::vector<Mask> edges;
  for (auto [u, v] : g.edge_list()) {
    const Mask e = (Mask{1} << u) | (Mask{1} << v);
    if ((e & sm) != 0) edges.push_back(e);
  }
  auto closed = [&](Mask e) {
    Mask out = e;
    for (Mask r = e; r != 0; r &= r - 1) out |= adj[static_cast<std::size_t>(__builtin_ctz(r))];
    return out;
  };
  int best = 0;
  std::function<void(std::size_t, Mask, int)> go = [&](std::size_t i, Mask blocked, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      if ((edges[j] & blocked) == 0) go(j + 1, blocked | closed(edges[j]), count + 1);
    }
  };
  go(0, 0, 0);
  return best;
}

int oracle_mu_minor(const Hypergraph& h, const VertexSet& s) {
  const std::vector<Mask> base = minimal_masks(edge_masks(h));
  const std::vector<int> cov = h.covered().to_vector();
  const Mask sm = to_mask(s);
  int best = 0;
  // label: 0 keep, 1 delete, 2 contract
  std::vector<int> label(cov.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i < cov.size()) {
      for (int l = 0; l < 3; ++l) {
        label[i] = l;
        go(i + 1);
      }
      return;
    }
    Mask del = 0;
    Mask con = 0;
    for (std::size_t j = 0; j < cov.size(); ++j) {
      if (label[j] == 1) del |= Mask{1} << cov[j];
      if (label[j] == 2) con |= Mask{1} << cov[j];
    }
    std::vector<Mask> minor;
    for (Mask e : base) {
      if ((e & del) == 0) minor.push_back(e & ~con);
    }
    minor = minimal_masks(minor);
    Mask seen = 0;
    for (Mask e : minor) {
      if (__builtin_popcount(e) != 2 || (e & seen) != 0 || (e & sm) == 0) return;
      seen |= e;
    }
    best = std::max(best, static_cast<int>(minor.size()));
  };
  go(0);
  return best;
}

std::optional<Rational> oracle_mwis(const Hypergraph& h) {
  if (h.has_empty_edge()) return std::nullopt;
  const std::vector<Mask> edges = edge_masks(h);
  const Mask all = to_mask(h.vertices());
  Rational best = 0;
  for (Mask s = all;; s = (s - 1) & all) {
    bool ok = true;
    for (Mask e : edges) ok = ok && !subset(e, s);
    if (ok) {
      Rational w = 0;
      for (Mask r = s; r != 0; r &= r - 1) w += h.weight(__builtin_ctz(r));
      best = std::max(best, w);
    }
    if (s == 0) break;
  }
  return best;
}

bool oracle_colourable(const Hypergraph& h, int k) {
  const std::vector<int> vs = h.vertices().to_vector();
  const std::vector<VertexSet>& edges = h.edges();
  for (const auto& e : edges) {
    if (e.size() <= 1) return false;
  }
  if (k <= 0) return vs.empty();
  std::vector<int> colour(static_cast<std::size_t>(std::max(h.id_bound(), 0)), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) return true;
    const int v = vs[i];
    for (int c = 0; c < k; ++c) {
      colour[static_cast<std::size_t>(v)] = c;
      bool ok = true;
      for (const auto& e : edges) {
        if (!e.contains(v) || e.back() != v) continue;
        bool mono = true;
        for (int u : e) mono = mono && colour[static_cast<std::size_t>(u)] == c;
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok && go(i + 1)) return true;
    }
    colour[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return go(0);
}

bool oracle_hom(const Hypergraph& h, const Hypergraph& f) {
  const std::vector<int> vs = h.vertices().to_vector();
  const std::vector<int> targets = f.vertices().to_vector();
  std::set<VertexSet> fedges(f.edges().begin(), f.edges().end());
  std::vector<int> phi(static_cast<std::size_t>(std::max(h.id_bound(), 0)), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) return true;
    const int v = vs[i];
    for (int x : targets) {
      phi[static_cast<std::size_t>(v)] = x;
      bool ok = true;
      for (const auto& e : h.edges()) {
        if (e.empty()) {
          ok = ok && fedges.count(VertexSet{}) > 0;
          continue;
        }
        if (e.back() != v) continue;
        VertexSet image;
        for (int u : e) image.insert(phi[static_cast<std::size_t>(u)]);
        ok = ok && fedges.count(image) > 0;
      }
      if (ok && go(i + 1)) return true;
    }
    phi[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (vs.empty()) {
    for (const auto& e : h.edges()) {
      if (e.empty() && fedges.count(VertexSet{}) == 0) return false;
    }
  }
  return go(0);
}

bool oracle_separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  const Mask sm = to_mask(s);
  const Mask am = to_mask(a);
  const Mask bm = to_mask(b);
  if (!subset(am & bm, sm)) return false;
  const Mask all = g.n() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.n()) - 1);
  const Mask r = reach_mask(adjacency_masks(g), am & ~sm, all & ~sm);
  return (r & bm & ~sm) == 0;
}

bool oracle_separator_exists(const Graph& g, const SetValue& value, const VertexSet& a, const VertexSet& b, int k) {
  for (const auto& s : all_subsets(VertexSet::range(g.n()))) {
    if (oracle_separates(g, s, a, b) && value(s) <= k) return true;
  }
  return false;
}

int oracle_lambda_tw(const Graph& g, const SetValue& value) {
  const int n = g.n();
  if (n == 0) return 0;
  if (n > 16) throw std::invalid_argument("oracle_lambda_tw: n too large");
  const auto adj = adjacency_masks(g);
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<int> tw(std::size_t{1} << n, INT_MAX);
  tw[0] = INT_MIN;
  for (Mask s = 1; s <= all; ++s) {
    for (Mask r = s; r != 0; r &= r - 1) {
      const int v = __builtin_ctz(r);
      const Mask rest = s & ~(Mask{1} << v);
      if (tw[rest] == INT_MAX) continue;
      // Vertices outside s reachable from v through the already eliminated set.
      const Mask inner = reach_mask(adj, Mask{1} << v, rest | (Mask{1} << v));
      Mask q = 0;
      for (Mask x = inner; x != 0; x &= x - 1) q |= adj[static_cast<std::size_t>(__builtin_ctz(x))];
      q &= ~s;
      const int bag = value(from_mask(q | (Mask{1} << v)));
      tw[s] = std::min(tw[s], std::max(tw[rest], bag));
    }
  }
  return tw[all];
}

std::vector<VertexSet> oracle_maximal_cliques(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.n();
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  auto clique = [&](Mask s) {
    for (Mask r = s; r != 0; r &= r - 1) {
      const int v = __builtin_ctz(r);
      if (!subset(s & ~(Mask{1} << v), adj[static_cast<std::size_t>(v)])) return false;
    }
    return true;
  };
  std::vector<Mask> out;
  for (Mask s = all;; s = (s - 1) & all) {
    if (s != 0 && clique(s)) {
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v) {
        if (!((s >> v) & 1u) && clique(s | (Mask{1} << v))) maximal = false;
      }
      if (maximal) out.push_back(s);
    }
    if (s == 0) break;
  }
  return sorted_sets(out);
}

bool oracle_two_sat(const TwoSatFormula& f) {
  const int n = f.num_vars;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    auto lit = [&](int l) {
      const bool val = (a >> (l / 2)) & 1u;
      return l % 2 == 0 ? val : !val;
    };
    bool ok = true;
    for (auto [x, y] : f.clauses) ok = ok && (lit(x) || lit(y));
    for (int v : f.forced_true) ok = ok && ((a >> v) & 1u);
    if (ok) return true;
  }
  return false;
}

}  // namespace mmtw::test
