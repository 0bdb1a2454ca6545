#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mmtw/decomposition.hpp"
#include "mmtw/errors.hpp"
#include "mmtw/hypergraph.hpp"
#include "mmtw/measures.hpp"

namespace mmtw {

/// Gaifman graph saturated with edges uv whose common neighbourhood has λ > k.
struct ClosureGraph {
  Graph graph;
  std::vector<std::pair<int, int>> added;  // insertion order
};

/// λ is always evaluated on the measure's own hypergraph.
ClosureGraph closure(const Measure& m, int k);

/// Clique-separator decomposition of G[within]; with no argument, of all of G.
std::vector<VertexSet> atoms(const Graph& g, const VertexSet& within);
std::vector<VertexSet> atoms(const Graph& g);

/// Literal 2v is x_v, 2v+1 is ¬x_v.
struct TwoSatFormula {
  int num_vars = 0;
  std::vector<std::pair<int, int>> clauses;
  std::vector<int> forced_true;

  static int pos(int v) { return 2 * v; }
  static int neg(int v) { return 2 * v + 1; }
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f);
/// Flips true, non-forced variables to false in index order while the formula stays satisfied.
void shrink_assignment(const TwoSatFormula& f, std::vector<bool>& assignment);

struct SeparatorResult {
  enum class Status {
    found,
    /// No separator with λ ≤ k exists, or λ-tw(H) > k.
    not_separable,
    tw_exceeded,
  };
  Status status = Status::not_separable;
  VertexSet separator;
  int lambda = 0;
  std::uint64_t branches = 0;
};

/// Separator with λ ≤ k²(k+1)/2 between A and B, or a refutation.
/// `pre` may supply the closure graph for (m, k).
SeparatorResult find_separator(const Measure& m, const VertexSet& a, const VertexSet& b, int k,
                               const Caps& caps = {}, const ClosureGraph* pre = nullptr);

/// True iff A∩B ⊆ S and no path of G−S joins A∖S to B∖S.
bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

struct SplitResult {
  bool refuted = false;
  VertexSet a, b, separator;
};

/// Partition (A, B) of W with an (A, B)-separator, each side of λ ≤ 2r/3 + k, or λ-tw > k.
SplitResult balanced_split(const Measure& m, const VertexSet& w, int k, int r, const Caps& caps = {},
                           const ClosureGraph* pre = nullptr);

/// 3(k³+k²)/2 + 3k + 3
int approx_K(int k);
/// k²(k+1)/2
int approx_s(int k);
/// 2k³ + 2k² + 3k + 3
int approx_width_bound(int k);

struct ApproxResult {
  bool refuted = false;
  TreeDecomposition decomposition;
  int w_node = -1;  // a node whose bag contains W
  std::uint64_t calls = 0;
};

/// Decomposition of λ-width ≤ 2k³+2k²+3k+3 with W inside one bag, or λ-tw > k.
ApproxResult approx_decomposition(const Hypergraph& h, int k, MeasureKind m, const VertexSet& w,
                                  const Caps& caps = {});
/// Runs approx_decomposition with W = ∅ on each connected component and joins the results.
ApproxResult approx_tree_decomposition(const Hypergraph& h, int k, MeasureKind m, const Caps& caps = {});

}  // namespace mmtw
