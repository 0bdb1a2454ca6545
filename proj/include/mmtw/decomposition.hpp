#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmtw/errors.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

/// Tree decomposition: node i carries bags[i]; `edges` are the tree edges.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;
  /// Vertex count of the decomposed hypergraph, used by the file format.
  int num_vertices = 0;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  int max_bag_size() const;
  std::vector<std::vector<int>> adjacency() const;
  /// Connects a new node with `bag` to `parent` (-1 for none) and returns its id.
  int add_node(VertexSet bag, int parent = -1);
};

/// Throws InputError naming the defect when the node graph is not a tree.
void check_tree(const TreeDecomposition& t);

/// Contracts tree edges whose endpoints carry equal bags; renumbers nodes in
/// order of first appearance.
TreeDecomposition normalize(const TreeDecomposition& t);

struct Validity {
  bool valid = true;
  std::string defect;
  int vertex = -1;           // vertex whose bags are disconnected or missing
  std::optional<VertexSet> edge;  // uncovered Gaifman edge
};

/// Checks vertex coverage, edge coverage and subtree connectivity.
Validity validate(const Hypergraph& h, const TreeDecomposition& t);

enum class MeasureKind { kappa, alpha, rho, mu };
std::optional<MeasureKind> parse_measure(const std::string& name);
std::string measure_name(MeasureKind m);

struct WidthReport {
  std::vector<int> per_bag;  // kInfinite for unbounded values
  int width = 0;
  int witness = -1;
};

/// Exact λ_H(B_t) for every bag; `threads` > 1 evaluates bags in parallel.
WidthReport width(const Hypergraph& h, const TreeDecomposition& t, MeasureKind m, const Caps& caps = {},
                  int threads = 1);

/// α(G[S]) by branch and bound.
int alpha_set(const Graph& g, const VertexSet& s);

/// μ_H(S). Graphs take the induced-matching path, other hypergraphs the minor search.
int mu_intersecting(const Hypergraph& h, const VertexSet& s, const Caps& caps = {});
/// Largest induced matching of G whose edges all meet S.
int mu_graph_induced_matching(const Graph& g, const VertexSet& s);
/// Largest k with kK₂ a minor of cl(H) and every matching edge meeting S.
int mu_minor_search(const Hypergraph& h, const VertexSet& s, const Caps& caps = {});

/// Decomposition from an elimination order of the Gaifman graph.
TreeDecomposition from_elimination_order(const Hypergraph& h, const std::vector<int>& order);

}  // namespace mmtw
