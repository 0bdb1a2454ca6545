#include "mmtw/approx.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

namespace mmtw {

namespace {

using IndependentVisitor = std::function<bool(const VertexSet&)>;

bool independent_rec(const Graph& g, const VertexSet& candidates, int need, VertexSet& current, bool& any,
                     const IndependentVisitor& visit) {
  if (need == 0) {
    any = true;
    return visit(current);
  }
  VertexSet after = candidates;
  for (int v : candidates) {
    after.erase(v);
    if (after.size() + 1 < need) return false;
    const VertexSet next = after - g.neighbors(v);
    if (next.size() + 1 < need) continue;
    current.insert(v);
    const bool stop = independent_rec(g, next, need - 1, current, any, visit);
    current.erase(v);
    if (stop) return true;
  }
  return false;
}

// Independent sets of G inside `pool` with at most `max_size` vertices, by size
// and then lexicographically. Returns true when `visit` asked to stop.
bool for_each_independent(const Graph& g, const VertexSet& pool, int max_size, const IndependentVisitor& visit) {
  for (int size = 0; size <= max_size; ++size) {
    VertexSet current;
    bool any = false;
    if (independent_rec(g, pool, size, current, any, visit)) return true;
    if (!any) break;
  }
  return false;
}

// Maximal cardinality search with fill (MCS-M) on G[u]; returns madj(v) for every v.
std::vector<VertexSet> mcs_m_madj(const Graph& g, const VertexSet& u) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> fill(static_cast<std::size_t>(n));
  for (int v : u) fill[static_cast<std::size_t>(v)] = g.neighbors(v) & u;
  VertexSet unnumbered = u;
  VertexSet numbered;
  std::vector<VertexSet> madj;
  while (!unnumbered.empty()) {
    int v = -1;
    for (int x : unnumbered) {
      if (v < 0 || weight[static_cast<std::size_t>(x)] > weight[static_cast<std::size_t>(v)]) v = x;
    }
    unnumbered.erase(v);
    madj.push_back(fill[static_cast<std::size_t>(v)] & numbered);

    // Bottleneck distances: smallest possible maximum weight of inner vertices on a v–x path.
    std::vector<int> dist(static_cast<std::size_t>(n), kInfinite);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (int x : g.neighbors(v) & unnumbered) {
      dist[static_cast<std::size_t>(x)] = -1;
      queue.emplace(-1, x);
    }
    while (!queue.empty()) {
      auto [d, x] = queue.top();
      queue.pop();
      if (d != dist[static_cast<std::size_t>(x)]) continue;
      const int through = std::max(d, weight[static_cast<std::size_t>(x)]);
      for (int y : g.neighbors(x) & unnumbered) {
        if (through < dist[static_cast<std::size_t>(y)]) {
          dist[static_cast<std::size_t>(y)] = through;
          queue.emplace(through, y);
        }
      }
    }
    std::vector<int> raised;
    for (int x : unnumbered) {
      if (dist[static_cast<std::size_t>(x)] < weight[static_cast<std::size_t>(x)]) raised.push_back(x);
    }
    for (int x : raised) {
      ++weight[static_cast<std::size_t>(x)];
      fill[static_cast<std::size_t>(x)].insert(v);
      fill[static_cast<std::size_t>(v)].insert(x);
    }
    numbered.insert(v);
  }
  return madj;
}

void atoms_rec(const Graph& g, const VertexSet& u, std::vector<VertexSet>& out) {
  auto comps = g.components(u);
  if (comps.size() > 1) {
    for (const auto& c : comps) atoms_rec(g, c, out);
    return;
  }
  for (const auto& sep : mcs_m_madj(g, u)) {
    if (sep.empty() || !g.is_clique(sep)) continue;
    auto parts = g.components(u - sep);
    if (parts.size() < 2) continue;
    for (const auto& c : parts) atoms_rec(g, c | sep, out);
    return;
  }
  out.push_back(u);
}

}  // namespace

ClosureGraph closure(const Measure& m, int k) {
  ClosureGraph out{m.gaifman_graph(), {}};
  Graph& g = out.graph;
  const std::vector<int> verts = m.hypergraph().vertices().to_vector();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        const int u = verts[i];
        const int v = verts[j];
        if (g.adjacent(u, v)) continue;
        const VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (common.empty()) continue;
        if (m.value(common) > k) {
          g.add_edge(u, v);
          out.added.emplace_back(u, v);
          changed = true;
        }
      }
    }
  }
  return out;
}

std::vector<VertexSet> atoms(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> pieces;
  if (!within.empty()) atoms_rec(g, within, pieces);
  canonicalize(pieces);
  std::vector<VertexSet> out;
  for (const auto& p : pieces) {
    const bool inside_other = std::any_of(pieces.begin(), pieces.end(), [&](const VertexSet& q) {
      return q != p && p.is_subset_of(q);
    });
    if (!inside_other) out.push_back(p);
  }
  return out;
}

std::vector<VertexSet> atoms(const Graph& g) { return atoms(g, VertexSet::range(g.n())); }

bool TwoSatFormula::satisfied_by(const std::vector<bool>& assignment) const {
  auto value = [&](int lit) { return assignment[static_cast<std::size_t>(lit / 2)] == (lit % 2 == 0); };
  for (int v : forced_true) {
    if (!assignment[static_cast<std::size_t>(v)]) return false;
  }
  return std::all_of(clauses.begin(), clauses.end(), [&](auto c) { return value(c.first) || value(c.second); });
}

std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f) {
  const int lits = 2 * f.num_vars;
  std::vector<std::vector<int>> imp(static_cast<std::size_t>(lits));
  auto add_clause = [&](int a, int b) {
    imp[static_cast<std::size_t>(a ^ 1)].push_back(b);
    imp[static_cast<std::size_t>(b ^ 1)].push_back(a);
  };
  for (auto [a, b] : f.clauses) add_clause(a, b);
  for (int v : f.forced_true) add_clause(TwoSatFormula::pos(v), TwoSatFormula::pos(v));

  // Tarjan's algorithm, iterative; components come out in reverse topological order.
  std::vector<int> index(static_cast<std::size_t>(lits), -1);
  std::vector<int> low(static_cast<std::size_t>(lits), 0);
  std::vector<int> comp(static_cast<std::size_t>(lits), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(lits), 0);
  std::vector<int> stack;
  int counter = 0;
  int comps = 0;
  for (int root = 0; root < lits; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto& out = imp[static_cast<std::size_t>(v)];
      if (next < out.size()) {
        const int w = out[next++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int done = v;
      if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = comps;
        } while (w != done);
        ++comps;
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  std::vector<bool> assignment(static_cast<std::size_t>(f.num_vars));
  for (int v = 0; v < f.num_vars; ++v) {
    const int p = comp[static_cast<std::size_t>(TwoSatFormula::pos(v))];
    const int q = comp[static_cast<std::size_t>(TwoSatFormula::neg(v))];
    if (p == q) return std::nullopt;
    assignment[static_cast<std::size_t>(v)] = p < q;
  }
  return assignment;
}

void shrink_assignment(const TwoSatFormula& f, std::vector<bool>& assignment) {
  std::vector<char> forced(assignment.size(), 0);
  for (int v : f.forced_true) forced[static_cast<std::size_t>(v)] = 1;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (!assignment[v] || forced[v]) continue;
    assignment[v] = false;
    if (!f.satisfied_by(assignment)) assignment[v] = true;
  }
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  if (!(a & b).is_subset_of(s)) return false;
  const VertexSet rest = VertexSet::range(g.n()) - s;
  return !g.reach(a - s, rest).intersects(b - s);
}

SeparatorResult find_separator(const Measure& m, const VertexSet& a, const VertexSet& b, int k, const Caps& caps,
                               const ClosureGraph* pre) {
  if (k < 1) throw InputError("find_separator: k must be at least 1");
  const VertexSet& all = m.hypergraph().vertices();
  if (!a.is_subset_of(all) || !b.is_subset_of(all)) throw InputError("find_separator: A or B outside the vertex set");
  ClosureGraph computed;
  if (pre == nullptr) {
    computed = closure(m, k);
    pre = &computed;
  }
  const Graph& g2 = pre->graph;
  const Graph& g = m.gaifman_graph();
  SeparatorResult result;

  for_each_independent(g2, all, k, [&](const VertexSet& iset) {
    const std::vector<int> is = iset.to_vector();
    const std::size_t p = is.size();
    VertexSet x;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) x |= g2.neighbors(is[i]) & g2.neighbors(is[j]);
    }
    std::vector<std::vector<VertexSet>> choices(p);
    for (std::size_t i = 0; i < p; ++i) {
      const VertexSet nv = (g2.neighbors(is[i]) - x).with(is[i]);
      choices[i] = atoms(g2, nv);
    }
    std::vector<std::size_t> pick(p, 0);
    while (true) {
      std::vector<VertexSet> kv(p);
      VertexSet z = x;
      for (std::size_t i = 0; i < p; ++i) {
        kv[i] = choices[i][pick[i]];
        z |= kv[i];
      }
      const VertexSet outside = all - z;
      const VertexSet reach_a = g2.reach(a - z, outside);
      const VertexSet reach_b = g2.reach(b - z, outside);
      const auto comps = g2.components(outside);
      std::vector<int> var_of(static_cast<std::size_t>(g2.n()), -1);
      std::vector<int> vertex_of;
      for (int v : z - x) {
        var_of[static_cast<std::size_t>(v)] = static_cast<int>(vertex_of.size());
        vertex_of.push_back(v);
      }
      std::vector<VertexSet> touching(vertex_of.size());
      for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const VertexSet around = g2.neighborhood(comps[ci]);
        for (int v : around & (z - x)) touching[static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])].insert(static_cast<int>(ci));
      }
      TwoSatFormula base;
      base.num_vars = static_cast<int>(vertex_of.size());
      for (std::size_t i = 0; i < p; ++i) {
        const auto members = kv[i].to_vector();
        for (std::size_t s = 0; s < members.size(); ++s) {
          for (std::size_t t = s + 1; t < members.size(); ++t) {
            if (!g2.adjacent(members[s], members[t])) {
              base.clauses.emplace_back(TwoSatFormula::neg(var_of[static_cast<std::size_t>(members[s])]),
                                        TwoSatFormula::neg(var_of[static_cast<std::size_t>(members[t])]));
            }
          }
        }
      }
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
        if (++result.branches > caps.enumeration) {
          throw ResourceError("find_separator: enumeration cap exceeded", result.branches);
        }
        // bit i set: is[i] ∈ J1 (K_v∖S reachable from A), clear: J2.
        TwoSatFormula f = base;
        auto in_j1 = [&](std::size_t i) { return ((mask >> i) & 1U) != 0; };
        for (std::size_t i = 0; i < p; ++i) {
          const VertexSet& from = in_j1(i) ? b : a;
          const VertexSet& reached = in_j1(i) ? reach_b : reach_a;
          for (int u : kv[i]) {
            if (from.contains(u) || g2.neighbors(u).intersects(reached)) {
              f.forced_true.push_back(var_of[static_cast<std::size_t>(u)]);
            }
          }
        }
        for (std::size_t i = 0; i < p; ++i) {
          if (!in_j1(i)) continue;
          for (std::size_t j = 0; j < p; ++j) {
            if (in_j1(j)) continue;
            for (int u : kv[i]) {
              const int xu = var_of[static_cast<std::size_t>(u)];
              for (int v : kv[j]) {
                const int xv = var_of[static_cast<std::size_t>(v)];
                if (u == v) {
                  f.forced_true.push_back(xu);
                } else if (g2.adjacent(u, v) ||
                           touching[static_cast<std::size_t>(xu)].intersects(touching[static_cast<std::size_t>(xv)])) {
                  f.clauses.emplace_back(TwoSatFormula::pos(xu), TwoSatFormula::pos(xv));
                }
              }
            }
          }
        }
        auto assignment = two_sat_solve(f);
        if (!assignment) continue;
        shrink_assignment(f, *assignment);
        VertexSet chosen;
        for (std::size_t v = 0; v < vertex_of.size(); ++v) {
          if ((*assignment)[v]) chosen.insert(vertex_of[v]);
        }
        for (std::size_t i = 0; i < p; ++i) {
          if (m.value(chosen & kv[i]) > k) {
            result.status = SeparatorResult::Status::tw_exceeded;
            return true;
          }
        }
        const VertexSet sep = chosen | x;
        if (separates(g, sep, a, b)) {
          result.status = SeparatorResult::Status::found;
          result.separator = sep;
          result.lambda = m.value(sep);
          return true;
        }
      }
      std::size_t i = 0;
      while (i < p && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == p) break;
    }
    return false;
  });
  return result;
}

int approx_K(int k) { return 3 * (k * k * k + k * k) / 2 + 3 * k + 3; }
int approx_s(int k) { return k * k * (k + 1) / 2; }
int approx_width_bound(int k) { return 2 * k * k * k + 2 * k * k + 3 * k + 3; }

SplitResult balanced_split(const Measure& m, const VertexSet& w, int k, int r, const Caps& caps,
                           const ClosureGraph* pre) {
  if (k < 1) throw InputError("balanced_split: k must be at least 1");
  ClosureGraph computed;
  if (pre == nullptr) {
    computed = closure(m, k);
    pre = &computed;
  }
  const Graph& g = m.gaifman_graph();
  const long long limit = 2LL * r + 3LL * k;
  auto too_big = [&](const VertexSet& s) { return 3LL * m.value(s) > limit; };
  SplitResult out;
  out.refuted = true;
  std::set<VertexSet> tried;
  for_each_independent(g, w, 2 * r / 3, [&](const VertexSet& iset) {
    const VertexSet gamma = iset | g.neighborhood(iset);
    const VertexSet a = gamma & w;
    if (!tried.insert(a).second) return false;
    const VertexSet b = w - gamma;
    if (too_big(a) || too_big(b)) return false;
    const auto sep = find_separator(m, a, b, k, caps, pre);
    if (sep.status == SeparatorResult::Status::tw_exceeded) return true;
    if (sep.status == SeparatorResult::Status::found) {
      out = SplitResult{false, a, b, sep.separator};
      return true;
    }
    return false;
  });
  return out;
}

namespace {

ApproxResult approx_rec(const Hypergraph& h, int k, MeasureKind kind, const VertexSet& w, const Caps& caps,
                        std::uint64_t& calls) {
  ++calls;
  ApproxResult out;
  const auto m = make_measure(kind, h);
  const int big_k = approx_K(k);
  const VertexSet& all = h.vertices();
  if (!w.is_subset_of(all)) throw InputError("approx_decomposition: W is not inside the vertex set");
  if (!m->decide(w, big_k)) throw InputError("approx_decomposition: λ(W) exceeds the admissible bound");
  for (int v : all) {
    if (!m->decide(VertexSet{v}, k)) {
      out.refuted = true;
      return out;
    }
  }
  VertexSet w_star = w;
  if (m->decide(all, big_k)) {
    w_star = all;
  } else {
    while (m->decide(w_star, big_k - 1)) {
      bool grown = false;
      for (int v : all - w_star) {
        if (m->decide(w_star.with(v), big_k)) {
          w_star.insert(v);
          grown = true;
          break;
        }
      }
      if (!grown) break;
    }
  }
  if (w_star == all) {
    out.decomposition.add_node(all);
    out.w_node = 0;
    return out;
  }
  const ClosureGraph cl = closure(*m, k);
  const SplitResult split = balanced_split(*m, w_star, k, big_k, caps, &cl);
  if (split.refuted) {
    out.refuted = true;
    return out;
  }
  const VertexSet& s = split.separator;
  const VertexSet rest = all - s;
  const VertexSet v1 = m->gaifman_graph().reach(split.a - s, rest);
  const VertexSet v2 = rest - v1;
  const int root = out.decomposition.add_node(w_star | s);
  out.w_node = root;
  const std::pair<const VertexSet*, const VertexSet*> sides[] = {{&v1, &split.a}, {&v2, &split.b}};
  for (auto [vi, ai] : sides) {
    if (vi->is_subset_of(*ai)) continue;
    const ApproxResult sub = approx_rec(projection(h, *vi | s), k, kind, *ai | s, caps, calls);
    if (sub.refuted) {
      out.refuted = true;
      return out;
    }
    const int offset = out.decomposition.num_nodes();
    for (const auto& bag : sub.decomposition.bags) out.decomposition.bags.push_back(bag);
    for (auto [x, y] : sub.decomposition.edges) out.decomposition.edges.emplace_back(x + offset, y + offset);
    out.decomposition.edges.emplace_back(root, sub.w_node + offset);
  }
  return out;
}

}  // namespace

ApproxResult approx_decomposition(const Hypergraph& h, int k, MeasureKind m, const VertexSet& w,
                                  const Caps& caps) {
  if (k < 1) throw InputError("approx_decomposition: k must be at least 1");
  std::uint64_t calls = 0;
  ApproxResult out = approx_rec(h, k, m, w, caps, calls);
  out.calls = calls;
  out.decomposition.num_vertices = h.id_bound();
  return out;
}

ApproxResult approx_tree_decomposition(const Hypergraph& h, int k, MeasureKind m, const Caps& caps) {
  if (k < 1) throw InputError("approx_decomposition: k must be at least 1");
  ApproxResult out;
  out.decomposition.num_vertices = h.id_bound();
  const Graph g = gaifman(h);
  int previous = -1;
  for (const auto& comp : g.components(h.vertices())) {
    std::uint64_t calls = 0;
    const ApproxResult sub = approx_rec(projection(h, comp), k, m, VertexSet{}, caps, calls);
    out.calls += calls;
    if (sub.refuted) {
      out.refuted = true;
      out.decomposition = {};
      return out;
    }
    const int offset = out.decomposition.num_nodes();
    for (const auto& bag : sub.decomposition.bags) out.decomposition.bags.push_back(bag);
    for (auto [x, y] : sub.decomposition.edges) out.decomposition.edges.emplace_back(x + offset, y + offset);
    if (previous >= 0) out.decomposition.edges.emplace_back(previous, offset + sub.w_node);
    previous = offset + sub.w_node;
  }
  if (out.decomposition.num_nodes() == 0) out.decomposition.add_node(VertexSet{});
  out.w_node = 0;
  return out;
}

}  // namespace mmtw
