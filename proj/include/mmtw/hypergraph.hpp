#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "mmtw/vertex_set.hpp"

namespace mmtw {

using Rational = boost::rational<std::int64_t>;

/// Marker for an unbounded measure value (for example an uncoverable bag under rho).
inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// A vertex universe plus a family of edges over it.
///
/// Edges are kept sorted in VertexSet order and without duplicates, so two
/// hypergraphs with the same universe are equal iff their edge vectors are.
/// Vertex ids are stable: deletion and contraction shrink the universe but do
/// not renumber. Only `induced` renumbers, and it returns the id map.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Universe {0..n-1}.
  explicit Hypergraph(int n, std::vector<VertexSet> edges = {});
  Hypergraph(VertexSet universe, std::vector<VertexSet> edges);

  const VertexSet& vertices() const { return universe_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  int num_vertices() const { return universe_.size(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  /// One past the largest vertex id in the universe.
  int id_bound() const { return universe_.back() + 1; }
  int rank() const;
  bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }
  bool has_edge(const VertexSet& e) const;
  /// |V| + sum of edge sizes.
  std::uint64_t size_norm() const;
  /// Union of all edges.
  VertexSet covered() const;
  bool is_uniform(int r) const;

  const std::map<int, Rational>& weights() const { return weights_; }
  void set_weight(int v, Rational w);
  /// Weight of v, 1 when unset.
  Rational weight(int v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.universe_ == b.universe_ && a.edges_ == b.edges_;
  }

 protected:
  VertexSet universe_;
  std::vector<VertexSet> edges_;
  std::map<int, Rational> weights_;
};

/// A hypergraph whose edges form an antichain.
class Clutter : public Hypergraph {
 public:
  Clutter() = default;
  /// Throws InputError if the edges are not an antichain.
  Clutter(VertexSet universe, std::vector<VertexSet> edges);
  explicit Clutter(int n, std::vector<VertexSet> edges = {});
  /// Throws InputError if `h` is not an antichain.
  explicit Clutter(const Hypergraph& h);
  /// Skips the antichain check; the caller guarantees it.
  static Clutter trusted(VertexSet universe, std::vector<VertexSet> edges);
};

bool is_antichain(const std::vector<VertexSet>& edges);

/// Simple undirected graph on {0..n-1} with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int n() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).size(); }
  int num_edges() const;
  /// Pairs (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edge_list() const;
  /// Union of N(v) over v in s.
  VertexSet neighborhood(const VertexSet& s) const;
  /// The vertices reachable from `from` inside `within` (both restricted to `within`).
  VertexSet reach(const VertexSet& from, const VertexSet& within) const;
  /// Connected components of G[within], ordered by smallest vertex.
  std::vector<VertexSet> components(const VertexSet& within) const;
  bool is_clique(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;
  Graph complement() const;

  Hypergraph to_hypergraph() const;
  /// Requires every edge to have exactly two vertices.
  static Graph from_hypergraph(const Hypergraph& h);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
};

/// tr_S of a family: the distinct intersections with `base`.
struct TraceFamily {
  VertexSet base;
  std::vector<VertexSet> members;  // canonical order

  bool contains(const VertexSet& a) const;
  friend bool operator==(const TraceFamily&, const TraceFamily&) = default;
};

/// Result of a renumbering operation. `old_id[new] = old`.
struct Reindexed {
  Hypergraph graph;
  std::vector<int> old_id;
};

Clutter minimalize(const Hypergraph& h);
Graph gaifman(const Hypergraph& h);

/// H[S] renumbered to {0..|S|-1} in increasing id order.
Reindexed induced(const Hypergraph& h, const VertexSet& s);
/// H[S] with the original ids kept: universe S, edges contained in S.
Hypergraph induced_same_ids(const Hypergraph& h, const VertexSet& s);
/// Universe S, edges {e ∩ S : e meets S}, minimalized. Same Gaifman graph as H on S.
Hypergraph projection(const Hypergraph& h, const VertexSet& s);

Clutter delete_vertex(const Clutter& c, int v);
Clutter contract_vertex(const Clutter& c, int v);
/// Deletes `del` and contracts `con`.
Clutter minor(const Clutter& c, const VertexSet& del, const VertexSet& con);

/// All minimal transversals by subset enumeration; throws ResourceError above `cap` vertices.
Clutter blocker_bruteforce(const Clutter& c, int cap = 20);
bool is_transversal(const Hypergraph& h, const VertexSet& t);
bool is_minimal_transversal(const Hypergraph& h, const VertexSet& t);

Clutter join(const Clutter& a, const Clutter& b);
Clutter meet(const Clutter& a, const Clutter& b);
/// H[u; h∖u] ∨ H[v; h∖v].
Clutter compose(const Clutter& c, const VertexSet& h, int u, int v);

TraceFamily trace(const std::vector<VertexSet>& family, const VertexSet& s);
TraceFamily complement_trace(const TraceFamily& t);

}  // namespace mmtw
