#include "mmtw/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "mmtw/measures.hpp"

namespace mmtw {

int TreeDecomposition::max_bag_size() const {
  int m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return m;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

int TreeDecomposition::add_node(VertexSet bag, int parent) {
  bags.push_back(std::move(bag));
  const int id = num_nodes() - 1;
  if (parent >= 0) edges.emplace_back(parent, id);
  return id;
}

void check_tree(const TreeDecomposition& t) {
  const int n = t.num_nodes();
  for (auto [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("tree edge references an unknown node");
    if (a == b) throw InputError("tree edge is a self-loop at node " + std::to_string(a + 1));
  }
  if (n == 0) {
    if (!t.edges.empty()) throw InputError("tree edges without nodes");
    return;
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : t.edges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) {
      throw InputError("tree edges contain a cycle through " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    }
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  if (static_cast<int>(t.edges.size()) != n - 1) throw InputError("decomposition tree is disconnected");
}

TreeDecomposition normalize(const TreeDecomposition& t) {
  check_tree(t);
  const int n = t.num_nodes();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [a, b] : t.edges) {
    if (t.bags[static_cast<std::size_t>(a)] == t.bags[static_cast<std::size_t>(b)]) {
      const int ra = find(a);
      const int rb = find(b);
      parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  }
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  TreeDecomposition out;
  out.num_vertices = t.num_vertices;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (new_id[static_cast<std::size_t>(r)] < 0) {
      new_id[static_cast<std::size_t>(r)] = out.num_nodes();
      out.bags.push_back(t.bags[static_cast<std::size_t>(r)]);
    }
  }
  for (auto [a, b] : t.edges) {
    const int x = new_id[static_cast<std::size_t>(find(a))];
    const int y = new_id[static_cast<std::size_t>(find(b))];
    if (x != y) out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Validity validate(const Hypergraph& h, const TreeDecomposition& t) {
  check_tree(t);
  for (int i = 0; i < t.num_nodes(); ++i) {
    if (!t.bags[static_cast<std::size_t>(i)].is_subset_of(h.vertices())) {
      throw InputError("bag " + std::to_string(i + 1) + " contains a vertex outside the hypergraph");
    }
  }
  Validity out;
  const auto adj = t.adjacency();
  for (int x : h.vertices()) {
    std::vector<int> holders;
    for (int i = 0; i < t.num_nodes(); ++i) {
      if (t.bags[static_cast<std::size_t>(i)].contains(x)) holders.push_back(i);
    }
    if (holders.empty()) {
      return {false, "vertex " + std::to_string(x + 1) + " is in no bag", x, std::nullopt};
    }
    std::vector<char> seen(static_cast<std::size_t>(t.num_nodes()), 0);
    std::vector<int> stack{holders.front()};
    seen[static_cast<std::size_t>(holders.front())] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)] && t.bags[static_cast<std::size_t>(w)].contains(x)) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    if (count != holders.size()) {
      return {false, "bags containing vertex " + std::to_string(x + 1) + " are disconnected", x, std::nullopt};
    }
  }
  const Graph g = gaifman(h);
  for (auto [u, v] : g.edge_list()) {
    const VertexSet e{u, v};
    const bool covered =
        std::any_of(t.bags.begin(), t.bags.end(), [&](const VertexSet& b) { return e.is_subset_of(b); });
    if (!covered) return {false, "edge " + e.to_string(1) + " is in no bag", -1, e};
  }
  return out;
}

std::optional<MeasureKind> parse_measure(const std::string& name) {
  if (name == "kappa") return MeasureKind::kappa;
  if (name == "alpha") return MeasureKind::alpha;
  if (name == "rho") return MeasureKind::rho;
  if (name == "mu") return MeasureKind::mu;
  return std::nullopt;
}

std::string measure_name(MeasureKind m) {
  switch (m) {
    case MeasureKind::kappa: return "kappa";
    case MeasureKind::alpha: return "alpha";
    case MeasureKind::rho: return "rho";
    case MeasureKind::mu: return "mu";
  }
  return "?";
}

WidthReport width(const Hypergraph& h, const TreeDecomposition& t, MeasureKind m, const Caps& caps, int threads) {
  const Graph g = gaifman(h);
  const std::size_t n = t.bags.size();
  WidthReport out;
  out.per_bag.assign(n, 0);
  auto eval = [&](std::size_t i) {
    const VertexSet& b = t.bags[i];
    switch (m) {
      case MeasureKind::kappa: return b.size() - 1;
      case MeasureKind::alpha: return alpha_set(g, b);
      case MeasureKind::rho: return rho_value(h, b);
      case MeasureKind::mu: return mu_intersecting(h, b, caps);
    }
    return 0;
  };
  auto guarded = [&](std::size_t i) {
    try {
      out.per_bag[i] = eval(i);
    } catch (const ResourceError& e) {
      throw ResourceError(std::string(e.what()) + " (bag " + std::to_string(i + 1) + ")", e.nodes_explored,
                          e.best_found);
    }
  };
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < n; i = next++) guarded(i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.witness < 0 || out.per_bag[i] > out.width) {
      out.width = out.per_bag[i];
      out.witness = static_cast<int>(i);
    }
  }
  return out;
}

namespace {

void alpha_rec(const Graph& g, VertexSet s, int current, int& best) {
  while (true) {
    if (current + s.size() <= best) return;
    if (s.empty()) {
      best = current;
      return;
    }
    // Vertices of degree at most one in G[S] belong to some maximum independent set.
    int pick = -1;
    int max_deg = -1;
    int max_v = -1;
    for (int v : s) {
      const int d = (g.neighbors(v) & s).size();
      if (d <= 1) {
        pick = v;
        break;
      }
      if (d > max_deg) {
        max_deg = d;
        max_v = v;
      }
    }
    if (pick >= 0) {
      s -= g.neighbors(pick);
      s.erase(pick);
      ++current;
      continue;
    }
    alpha_rec(g, (s - g.neighbors(max_v)).without(max_v), current + 1, best);
    s.erase(max_v);
  }
}

void matching_rec(const std::vector<VertexSet>& compatible, VertexSet candidates, int current, int& best) {
  if (current + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = current;
    return;
  }
  const int e = candidates.front();
  matching_rec(compatible, candidates & compatible[static_cast<std::size_t>(e)], current + 1, best);
  matching_rec(compatible, candidates.without(e), current, best);
}

class MinorSearch {
 public:
  MinorSearch(const VertexSet& s, const Caps& caps, std::vector<int> order)
      : s_(s), caps_(caps), order_(std::move(order)) {}

  int run(const Clutter& c, std::size_t pos) {
    const VertexSet cov = c.covered();
    const int bound = std::min((cov & s_).size(), cov.size() / 2);
    if (bound == 0) return 0;
    if (auto m = matching_value(c)) {
      best_ = std::max(best_, *m);
      return *m;
    }
    while (pos < order_.size() && !cov.contains(order_[pos])) ++pos;
    if (pos == order_.size()) return 0;
    Key key{pos, c.edges()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= caps_.mu_states) {
      throw ResourceError("mu_minor_search: state cap exceeded", memo_.size(), static_cast<std::uint64_t>(best_));
    }
    const int v = order_[pos];
    int value = run(c, pos + 1);
    if (value < bound) value = std::max(value, run(delete_vertex(c, v), pos + 1));
    if (value < bound) value = std::max(value, run(contract_vertex(c, v), pos + 1));
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  struct Key {
    std::size_t pos;
    std::vector<VertexSet> edges;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.pos;
      for (const auto& e : k.edges) h = h * 1000003u ^ e.hash();
      return h;
    }
  };

  // A clutter made of pairwise disjoint 2-edges already is a matching; deleting
  // the edges that miss S is optimal from here.
  std::optional<int> matching_value(const Clutter& c) const {
    VertexSet seen;
    int meeting = 0;
    for (const auto& e : c.edges()) {
      if (e.size() != 2 || e.intersects(seen)) return std::nullopt;
      seen |= e;
      if (e.intersects(s_)) ++meeting;
    }
    return meeting;
  }

  const VertexSet& s_;
  const Caps& caps_;
  std::vector<int> order_;
  std::unordered_map<Key, int, KeyHash> memo_;
  int best_ = 0;
};

}  // namespace

int alpha_set(const Graph& g, const VertexSet& s) {
  int best = 0;
  alpha_rec(g, s, 0, best);
  return best;
}

int mu_graph_induced_matching(const Graph& g, const VertexSet& s) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list()) {
    if (s.contains(u) || s.contains(v)) edges.emplace_back(u, v);
  }
  std::vector<VertexSet> compatible(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexSet close = g.neighbors(edges[i].first) | g.neighbors(edges[i].second) |
                            VertexSet{edges[i].first, edges[i].second};
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i && !close.contains(edges[j].first) && !close.contains(edges[j].second)) {
        compatible[i].insert(static_cast<int>(j));
      }
    }
  }
  int best = 0;
  matching_rec(compatible, VertexSet::range(static_cast<int>(edges.size())), 0, best);
  return best;
}

int mu_minor_search(const Hypergraph& h, const VertexSet& s, const Caps& caps) {
  const Clutter c = minimalize(h);
  MinorSearch search(s, caps, c.vertices().to_vector());
  return search.run(c, 0);
}

int mu_intersecting(const Hypergraph& h, const VertexSet& s, const Caps& caps) {
  if (!s.is_subset_of(h.vertices())) throw InputError("mu: S is not inside the vertex set");
  const Clutter c = minimalize(h);
  if (c.is_uniform(2)) return mu_graph_induced_matching(Graph::from_hypergraph(c), s);
  return mu_minor_search(c, s, caps);
}

TreeDecomposition from_elimination_order(const Hypergraph& h, const std::vector<int>& order) {
  Graph g = gaifman(h);
  const int n = g.n();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (int v : h.vertices()) {
    if (position[static_cast<std::size_t>(v)] < 0) throw InputError("elimination order misses a vertex");
  }
  TreeDecomposition t;
  t.num_vertices = h.id_bound();
  std::vector<int> parent(order.size(), -1);
  VertexSet eliminated;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    const VertexSet later = g.neighbors(v) - eliminated;
    for (int a : later) {
      for (int b : later) {
        if (a < b) g.add_edge(a, b);
      }
    }
    t.bags.push_back(later.with(v));
    int best = -1;
    for (int u : later) {
      if (best < 0 || position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(best)]) best = u;
    }
    if (best >= 0) parent[i] = position[static_cast<std::size_t>(best)];
    eliminated.insert(v);
  }
  int previous_root = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (parent[i] >= 0) {
      t.edges.emplace_back(static_cast<int>(i), parent[i]);
    } else {
      if (previous_root >= 0) t.edges.emplace_back(previous_root, static_cast<int>(i));
      previous_root = static_cast<int>(i);
    }
  }
  return t;
}

}  // namespace mmtw
