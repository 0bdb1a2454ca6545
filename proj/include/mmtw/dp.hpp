#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mmtw/blocker_trace.hpp"
#include "mmtw/decomposition.hpp"
#include "mmtw/errors.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

/// A function f_H^S over tuples of trace members, given by its four table operations.
template <class F>
concept BlockerReadable = requires(const F& f, const typename F::Table& t, const Hypergraph& h,
                                   const std::vector<VertexSet>& mis, const VertexSet& s, int v,
                                   const TraceFamily& tr) {
  { f.leaf_init(h, mis) } -> std::same_as<typename F::Table>;
  { f.restrict(t, s) } -> std::same_as<typename F::Table>;
  { f.add_isolated(t, v) } -> std::same_as<typename F::Table>;
  { f.merge(tr, t, t) } -> std::same_as<typename F::Table>;
};

struct DpStats {
  std::uint64_t trace_members = 0;  // summed over all merge traces
  std::uint64_t largest_trace = 0;
};

namespace detail {
/// Children lists of the tree rooted at node 0, and a post-order.
void root_tree(const TreeDecomposition& t, std::vector<std::vector<int>>& children, std::vector<int>& post);
}  // namespace detail

/// Evaluates f over T rooted at node 0 and returns the root table restricted to ∅.
template <BlockerReadable F>
typename F::Table run_dp(const Hypergraph& h, const TreeDecomposition& t, const F& f, const Caps& caps = {},
                         DpStats* stats = nullptr) {
  const Validity ok = validate(h, t);
  if (!ok.valid) throw InputError("run_dp: " + ok.defect);
  if (t.num_nodes() == 0) return f.restrict(f.leaf_init(h, enumerate_mis(h)), VertexSet{});
  std::vector<std::vector<int>> children;
  std::vector<int> post;
  detail::root_tree(t, children, post);
  std::vector<std::optional<typename F::Table>> tables(static_cast<std::size_t>(t.num_nodes()));
  std::vector<VertexSet> below(static_cast<std::size_t>(t.num_nodes()));
  for (int node : post) {
    const VertexSet& bag = t.bags[static_cast<std::size_t>(node)];
    const Hypergraph local = induced_same_ids(h, bag);
    typename F::Table table = f.leaf_init(local, trace_independent(local, bag, caps).members);
    VertexSet current = bag;
    for (int c : children[static_cast<std::size_t>(node)]) {
      const VertexSet& cbag = t.bags[static_cast<std::size_t>(c)];
      typename F::Table ct = f.restrict(*tables[static_cast<std::size_t>(c)], bag & cbag);
      tables[static_cast<std::size_t>(c)].reset();
      for (int v : bag - cbag) ct = f.add_isolated(ct, v);
      current |= below[static_cast<std::size_t>(c)];
      TraceFamily tr;
      try {
        tr = trace_independent(induced_same_ids(h, current), bag, caps);
      } catch (const ResourceError& e) {
        throw ResourceError(std::string(e.what()) + " (bag " + std::to_string(node + 1) + ")", e.nodes_explored,
                            e.best_found);
      }
      if (stats != nullptr) {
        stats->trace_members += tr.members.size();
        stats->largest_trace = std::max<std::uint64_t>(stats->largest_trace, tr.members.size());
      }
      table = f.merge(tr, table, ct);
    }
    below[static_cast<std::size_t>(node)] = current;
    tables[static_cast<std::size_t>(node)] = std::move(table);
  }
  return f.restrict(*tables[0], VertexSet{});
}

// ---- Maximum weighted independent set ----

struct MwisEntry {
  Rational value;
  VertexSet witness;
};

/// f_H^S(A) = max weight of a maximal independent set with trace A.
class MwisFunction {
 public:
  struct Table {
    VertexSet base;
    std::map<VertexSet, MwisEntry> entries;
  };
  explicit MwisFunction(const Hypergraph& weighted) : h_(weighted) {}

  Table leaf_init(const Hypergraph& h, const std::vector<VertexSet>& mis) const;
  Table restrict(const Table& t, const VertexSet& s) const;
  Table add_isolated(const Table& t, int v) const;
  Table merge(const TraceFamily& tr, const Table& a, const Table& b) const;

  Rational weight(const VertexSet& s) const;

 private:
  const Hypergraph& h_;
};

struct MwisResult {
  bool feasible = false;  // false only when cl(H) contains the empty edge
  Rational value;
  VertexSet witness;
};

MwisResult mwis(const Hypergraph& h, const TreeDecomposition& t, const Caps& caps = {});

// ---- Cover-type decision problems (colouring, homomorphism) ----

/// f_H^S(A_1..A_p) = 1 iff every A_i is a trace member, the tuple satisfies the
/// covering condition on S, and A lies coordinatewise below the trace of some
/// covering tuple of maximal independent sets. Tables store those maximal tuples.
class CoverFunction {
 public:
  using Tuple = std::vector<VertexSet>;
  struct Table {
    VertexSet base;
    std::vector<Tuple> generators;  // canonical, antichain
  };

  /// Colouring with k colours: the union of the coordinates must cover.
  static CoverFunction colouring(int k, const Caps& caps = {});
  /// Homomorphism into F given i(F): each vertex x of F contributes ∩_{i : x ∈ I_i} A_i.
  static CoverFunction homomorphism(const std::vector<VertexSet>& target_mis, int target_vertices,
                                    const Caps& caps = {});

  int arity() const { return arity_; }
  bool covers(const Tuple& a, const VertexSet& s) const;

  Table leaf_init(const Hypergraph& h, const std::vector<VertexSet>& mis) const;
  Table restrict(const Table& t, const VertexSet& s) const;
  Table add_isolated(const Table& t, int v) const;
  Table merge(const TraceFamily& tr, const Table& a, const Table& b) const;

  /// Every tuple with f = 1, given tr = tr_S(i(H)).
  std::vector<Tuple> expand(const Table& t, const TraceFamily& tr) const;

 private:
  CoverFunction() = default;
  void finish(Table& t) const;
  void canonical(Tuple& a) const;

  int arity_ = 0;
  bool symmetric_ = false;
  std::vector<VertexSet> groups_;  // homomorphism: for each x ∈ V(F), the coordinates i with x ∈ I_i
  Caps caps_;
};

bool chromatic_decide(const Hypergraph& h, int k, const TreeDecomposition& t, const Caps& caps = {});
bool hom_decide(const Hypergraph& h, const Hypergraph& f, const TreeDecomposition& t, const Caps& caps = {});

}  // namespace mmtw
