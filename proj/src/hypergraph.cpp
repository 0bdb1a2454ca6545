#include "mmtw/hypergraph.hpp"

#include <algorithm>
#include <cstdint>

#include "mmtw/errors.hpp"

namespace mmtw {

namespace {

void check_inside(const VertexSet& universe, const std::vector<VertexSet>& edges) {
  for (const auto& e : edges) {
    if (!e.is_subset_of(universe)) {
      throw InputError("edge " + e.to_string(1) + " is not contained in the vertex set");
    }
  }
}

void require_vertex(const Hypergraph& h, int v) {
  if (!h.vertices().contains(v)) throw InputError("unknown vertex " + std::to_string(v + 1));
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : Hypergraph(VertexSet::range(n), std::move(edges)) {}

Hypergraph::Hypergraph(VertexSet universe, std::vector<VertexSet> edges)
    : universe_(std::move(universe)), edges_(std::move(edges)) {
  check_inside(universe_, edges_);
  canonicalize(edges_);
}

int Hypergraph::rank() const {
  int r = 0;
  for (const auto& e : edges_) r = std::max(r, e.size());
  return r;
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::uint64_t Hypergraph::size_norm() const {
  std::uint64_t total = static_cast<std::uint64_t>(universe_.size());
  for (const auto& e : edges_) total += static_cast<std::uint64_t>(e.size());
  return total;
}

VertexSet Hypergraph::covered() const {
  VertexSet u;
  for (const auto& e : edges_) u |= e;
  return u;
}

bool Hypergraph::is_uniform(int r) const {
  return std::all_of(edges_.begin(), edges_.end(), [r](const VertexSet& e) { return e.size() == r; });
}

void Hypergraph::set_weight(int v, Rational w) {
  require_vertex(*this, v);
  weights_[v] = w;
}

Rational Hypergraph::weight(int v) const {
  auto it = weights_.find(v);
  return it == weights_.end() ? Rational(1) : it->second;
}

bool is_antichain(const std::vector<VertexSet>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && edges[i].is_subset_of(edges[j])) return false;
    }
  }
  return true;
}

Clutter::Clutter(VertexSet universe, std::vector<VertexSet> edges)
    : Hypergraph(std::move(universe), std::move(edges)) {
  if (!is_antichain(edges_)) throw InputError("edge family is not a clutter");
}

Clutter::Clutter(int n, std::vector<VertexSet> edges) : Clutter(VertexSet::range(n), std::move(edges)) {}

Clutter::Clutter(const Hypergraph& h) : Hypergraph(h) {
  if (!is_antichain(edges_)) throw InputError("edge family is not a clutter");
}

Clutter Clutter::trusted(VertexSet universe, std::vector<VertexSet> edges) {
  Clutter c;
  c.universe_ = std::move(universe);
  c.edges_ = std::move(edges);
  canonicalize(c.edges_);
  return c;
}

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

int Graph::num_edges() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out |= neighbors(v);
  return out;
}

VertexSet Graph::reach(const VertexSet& from, const VertexSet& within) const {
  VertexSet seen = from & within;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = reach(VertexSet{left.front()}, left);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (int v : s) {
    if (!(s.without(v)).is_subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (int v : s) {
    if (neighbors(v).intersects(s)) return false;
  }
  return true;
}

Graph Graph::complement() const {
  Graph g(n());
  for (int u = 0; u < n(); ++u) {
    for (int v = u + 1; v < n(); ++v) {
      if (!adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

Hypergraph Graph::to_hypergraph() const {
  std::vector<VertexSet> edges;
  for (auto [u, v] : edge_list()) edges.push_back(VertexSet{u, v});
  return Hypergraph(n(), std::move(edges));
}

Graph Graph::from_hypergraph(const Hypergraph& h) {
  Graph g(h.id_bound());
  for (const auto& e : h.edges()) {
    if (e.size() != 2) throw InputError("edge " + e.to_string(1) + " does not have two vertices");
    g.add_edge(e.front(), e.back());
  }
  return g;
}

bool TraceFamily::contains(const VertexSet& a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Clutter minimalize(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<std::pair<int, std::size_t>> by_size;
  by_size.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) by_size.emplace_back(edges[i].size(), i);
  std::sort(by_size.begin(), by_size.end());
  if (!by_size.empty() && by_size.front().first == 0) return Clutter::trusted(h.vertices(), {VertexSet{}});
  // A kept edge can only lie inside e if its smallest vertex is in e.
  std::vector<std::vector<std::size_t>> by_front(static_cast<std::size_t>(std::max(h.id_bound(), 0)));
  // Buckets fill in size order, so each scan stops at the first edge that is not smaller than e.
  std::vector<VertexSet> kept;
  std::vector<int> kept_size;
  for (const auto& [size, index] : by_size) {
    const VertexSet& e = edges[index];
    bool dominated = false;
    for (int v : e) {
      for (std::size_t i : by_front[static_cast<std::size_t>(v)]) {
        if (kept_size[i] >= size) break;
        if (kept[i].is_subset_of(e)) {
          dominated = true;
          break;
        }
      }
      if (dominated) break;
    }
    if (dominated) continue;
    by_front[static_cast<std::size_t>(e.front())].push_back(kept.size());
    kept.push_back(e);
    kept_size.push_back(size);
  }
  return Clutter::trusted(h.vertices(), std::move(kept));
}

Graph gaifman(const Hypergraph& h) {
  Graph g(std::max(h.id_bound(), 0));
  for (const auto& e : h.edges()) {
    auto vs = e.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
  }
  return g;
}

Reindexed induced(const Hypergraph& h, const VertexSet& s) {
  if (!s.is_subset_of(h.vertices())) throw InputError("induced: vertex set is not inside the universe");
  Reindexed out;
  out.old_id = s.to_vector();
  std::vector<int> new_id(static_cast<std::size_t>(std::max(h.id_bound(), 0)), -1);
  for (std::size_t i = 0; i < out.old_id.size(); ++i) new_id[static_cast<std::size_t>(out.old_id[i])] = static_cast<int>(i);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (!e.is_subset_of(s)) continue;
    VertexSet mapped;
    for (int v : e) mapped.insert(new_id[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  out.graph = Hypergraph(static_cast<int>(out.old_id.size()), std::move(edges));
  for (const auto& [v, w] : h.weights()) {
    if (s.contains(v)) out.graph.set_weight(new_id[static_cast<std::size_t>(v)], w);
  }
  return out;
}

Hypergraph induced_same_ids(const Hypergraph& h, const VertexSet& s) {
  if (!s.is_subset_of(h.vertices())) throw InputError("induced: vertex set is not inside the universe");
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (e.is_subset_of(s)) edges.push_back(e);
  }
  Hypergraph out(s, std::move(edges));
  for (const auto& [v, w] : h.weights()) {
    if (s.contains(v)) out.set_weight(v, w);
  }
  return out;
}

Hypergraph projection(const Hypergraph& h, const VertexSet& s) {
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (e.intersects(s)) edges.push_back(e & s);
  }
  return minimalize(Hypergraph(s & h.vertices(), std::move(edges)));
}

Clutter delete_vertex(const Clutter& c, int v) {
  require_vertex(c, v);
  std::vector<VertexSet> edges;
  for (const auto& e : c.edges()) {
    if (!e.contains(v)) edges.push_back(e);
  }
  return Clutter::trusted(c.vertices().without(v), std::move(edges));
}

Clutter contract_vertex(const Clutter& c, int v) {
  require_vertex(c, v);
  std::vector<VertexSet> edges;
  edges.reserve(c.edges().size());
  for (const auto& e : c.edges()) edges.push_back(e.without(v));
  return minimalize(Hypergraph(c.vertices().without(v), std::move(edges)));
}

Clutter minor(const Clutter& c, const VertexSet& del, const VertexSet& con) {
  if (del.intersects(con)) throw InputError("minor: deleted and contracted sets overlap");
  if (!(del | con).is_subset_of(c.vertices())) throw InputError("minor: unknown vertex");
  std::vector<VertexSet> edges;
  for (const auto& e : c.edges()) {
    if (!e.intersects(del)) edges.push_back(e - con);
  }
  return minimalize(Hypergraph(c.vertices() - del - con, std::move(edges)));
}

bool is_transversal(const Hypergraph& h, const VertexSet& t) {
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return e.intersects(t); });
}

bool is_minimal_transversal(const Hypergraph& h, const VertexSet& t) {
  if (!is_transversal(h, t)) return false;
  for (int x : t) {
    bool has_private = std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
      return e.contains(x) && !e.intersects(t.without(x));
    });
    if (!has_private) return false;
  }
  return true;
}

Clutter blocker_bruteforce(const Clutter& c, int cap) {
  if (c.num_vertices() > cap) {
    throw ResourceError("blocker_bruteforce: " + std::to_string(c.num_vertices()) + " vertices exceed cap " +
                        std::to_string(cap));
  }
  const std::vector<int> local = c.covered().to_vector();
  const int k = static_cast<int>(local.size());
  std::vector<std::uint32_t> masks;
  for (const auto& e : c.edges()) {
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i) {
      if (e.contains(local[static_cast<std::size_t>(i)])) m |= std::uint32_t{1} << i;
    }
    masks.push_back(m);
  }
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t t = 0; t < limit; ++t) {
    const auto tm = static_cast<std::uint32_t>(t);
    std::uint32_t privately_hit = 0;
    bool transversal = true;
    for (std::uint32_t m : masks) {
      const std::uint32_t hit = m & tm;
      if (hit == 0) {
        transversal = false;
        break;
      }
      if ((hit & (hit - 1)) == 0) privately_hit |= hit;
    }
    if (!transversal || privately_hit != tm) continue;
    VertexSet s;
    for (int i = 0; i < k; ++i) {
      if ((tm >> i) & 1U) s.insert(local[static_cast<std::size_t>(i)]);
    }
    out.push_back(std::move(s));
  }
  return Clutter::trusted(c.vertices(), std::move(out));
}

Clutter join(const Clutter& a, const Clutter& b) {
  std::vector<VertexSet> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return minimalize(Hypergraph(a.vertices() | b.vertices(), std::move(edges)));
}

Clutter meet(const Clutter& a, const Clutter& b) {
  std::vector<VertexSet> edges;
  for (const auto& x : a.edges()) {
    for (const auto& y : b.edges()) edges.push_back(x | y);
  }
  return minimalize(Hypergraph(a.vertices() | b.vertices(), std::move(edges)));
}

Clutter compose(const Clutter& c, const VertexSet& h, int u, int v) {
  if (!c.has_edge(h)) throw InputError("compose: " + h.to_string(1) + " is not an edge");
  if (u == v || !h.contains(u) || !h.contains(v)) throw InputError("compose: u and v must be distinct vertices of h");
  return join(minor(c, VertexSet{u}, h.without(u)), minor(c, VertexSet{v}, h.without(v)));
}

TraceFamily trace(const std::vector<VertexSet>& family, const VertexSet& s) {
  TraceFamily t{s, {}};
  t.members.reserve(family.size());
  for (const auto& f : family) t.members.push_back(f & s);
  canonicalize(t.members);
  return t;
}

TraceFamily complement_trace(const TraceFamily& t) {
  TraceFamily out{t.base, {}};
  out.members.reserve(t.members.size());
  for (const auto& a : t.members) out.members.push_back(t.base - a);
  canonicalize(out.members);
  return out;
}

}  // namespace mmtw
