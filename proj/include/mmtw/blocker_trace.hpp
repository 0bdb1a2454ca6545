#pragma once

#include <cstdint>
#include <vector>

#include "mmtw/errors.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

struct TraceResult {
  TraceFamily traces;
  /// Size of the branching tree, counting revisits of memoized subproblems (saturating).
  std::uint64_t nodes_explored = 0;
  /// Distinct subproblems actually solved.
  std::uint64_t distinct_nodes = 0;
  /// Longest chain of compositions along any branch.
  int max_quasimatching_len = 0;
};

/// tr_S(b(cl(H))) by branching on deletions and compositions.
///
/// Throws ResourceError when the distinct-node or depth cap is hit, InputError
/// when S is not inside the vertex set.
TraceResult trace_blocker(const Hypergraph& h, const VertexSet& s, const Caps& caps = {});

/// tr_S(i(cl(H))): the trace of all maximal independent sets.
TraceFamily trace_independent(const Hypergraph& h, const VertexSet& s, const Caps& caps = {});

/// Decides A ∈ tr_S(b(C)) without enumerating the blocker.
bool in_blocker_trace(const Clutter& c, const VertexSet& s, const VertexSet& a);

/// All maximal independent sets of cl(H), as complements of minimal transversals.
std::vector<VertexSet> enumerate_mis(const Hypergraph& h, int cap = 20);

}  // namespace mmtw
