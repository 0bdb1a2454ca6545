#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmtw/approx.hpp"
#include "mmtw/decomposition.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

/// M(G): every vertex v gets a pendant neighbour v' = n + v.
struct PendantExtension {
  Graph original;
  Graph extended;

  int n() const { return original.n(); }
  int partner(int v) const { return v < n() ? v + n() : v - n(); }
  /// "v" or "v'" with 1-based ids, for the id-map sidecar.
  std::string origin(int w) const;
};

PendantExtension pendant_extend(const Graph& g);
/// Deletes every v' from the bags. Throws InputError when T is not a decomposition of M(G).
TreeDecomposition pendant_pullback(const PendantExtension& x, const TreeDecomposition& t);
/// 𝓜(T): hangs a bag {v, v'} off the first node containing v.
TreeDecomposition pendant_push(const PendantExtension& x, const TreeDecomposition& t);

/// L²(G): one vertex per edge of G; e and f adjacent iff G[e ∪ f] is connected.
struct LineSquare {
  Graph original;
  Graph line;
  std::vector<std::pair<int, int>> edge_of;  // L-vertex -> edge of G, in Graph::edge_list order
  std::vector<VertexSet> incident;           // G-vertex -> incident L-vertices

  /// 𝓛(S): the edges of G incident with S.
  VertexSet lift(const VertexSet& s) const;
  /// "u-v" with 1-based ids.
  std::string origin(int e) const;
};

LineSquare line_square(const Graph& g);

struct LinePullback {
  TreeDecomposition decomposition;
  /// Isolated vertices of G, which have no counterpart in L; they are appended to bag 0.
  VertexSet isolated;
};

/// Bags S_t = vertices whose incident edges all lie in B_t.
/// Throws InputError when T is not a decomposition of L.
LinePullback line_square_pullback(const LineSquare& x, const TreeDecomposition& t);
/// 𝓛(T): same tree, bags 𝓛(B_t).
TreeDecomposition line_square_push(const LineSquare& x, const TreeDecomposition& t);

struct MuApproxResult {
  bool refuted = false;
  TreeDecomposition decomposition;
  VertexSet isolated;
  std::uint64_t calls = 0;
};

/// μ-width ≤ 2k³+2k²+3k+3 decomposition of G, or μ-tw(G) > k. Works per connected component.
MuApproxResult approximate_mu_tw(const Graph& g, int k, const Caps& caps = {});

}  // namespace mmtw
