#include "mmtw/blocker_trace.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace mmtw {

namespace {

struct ClutterKey {
  VertexSet universe;
  std::vector<VertexSet> edges;
  friend bool operator==(const ClutterKey&, const ClutterKey&) = default;
};

struct ClutterKeyHash {
  std::size_t operator()(const ClutterKey& k) const {
    std::size_t h = k.universe.hash();
    for (const auto& e : k.edges) h = h * 1000003u ^ e.hash();
    return h;
  }
};

struct Entry {
  std::vector<VertexSet> traces;
  int qm = 0;
  std::uint64_t size = 1;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

bool no_edge_inside(const Clutter& c, const VertexSet& w) {
  return std::none_of(c.edges().begin(), c.edges().end(), [&](const VertexSet& e) { return e.is_subset_of(w); });
}

bool assign_private(const Clutter& c, const std::vector<int>& a, const VertexSet& a_set, std::size_t i,
                    const VertexSet& w) {
  if (i == a.size()) return true;
  const int x = a[i];
  for (const auto& f : c.edges()) {
    if (!f.contains(x) || f.intersects(a_set.without(x))) continue;
    VertexSet w2 = w | f.without(x);
    if (no_edge_inside(c, w2) && assign_private(c, a, a_set, i + 1, w2)) return true;
  }
  return false;
}

class Solver {
 public:
  Solver(const VertexSet& s, const Caps& caps) : s_(s), caps_(caps) {}

  const Entry& solve(const Clutter& c, int depth) {
    ClutterKey key{c.vertices(), c.edges()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++distinct_ > caps_.nodes) {
      throw ResourceError("trace_blocker: node cap exceeded", distinct_, max_traces_);
    }
    if (depth > caps_.depth) throw ResourceError("trace_blocker: depth cap exceeded", distinct_, max_traces_);

    Entry out;
    if (c.has_empty_edge()) {
      return memo_.emplace(std::move(key), std::move(out)).first->second;
    }
    if (c.edges().empty()) {
      out.traces.push_back(VertexSet{});
      return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    const VertexSet& v = c.vertices();
    const VertexSet s_here = s_ & v;
    const VertexSet outside = v - s_here;
    const int x = outside.empty() ? v.front() : outside.front();

    {
      const Entry& d = solve(delete_vertex(c, x), depth + 1);
      out.qm = d.qm;
      out.size = saturating_add(out.size, d.size);
      if (!s_here.contains(x)) {
        out.traces = d.traces;
      } else {
        // Here V ⊆ S, so each returned member is a whole transversal of C∖x.
        for (const auto& a : d.traces) out.traces.push_back(is_transversal(c, a) ? a : a.with(x));
      }
    }
    canonicalize(out.traces);

    std::vector<VertexSet> candidates;
    for (int z : s_here.without(x)) {
      for (const auto& h : c.edges()) {
        if (!h.contains(x) || !h.contains(z)) continue;
        const Entry& e = solve(compose(c, h, x, z), depth + 1);
        out.qm = std::max(out.qm, e.qm + 1);
        out.size = saturating_add(out.size, e.size);
        for (const auto& a : e.traces) candidates.push_back(a.with(z));
      }
    }
    canonicalize(candidates);
    std::vector<VertexSet> accepted;
    for (const auto& a : candidates) {
      if (!std::binary_search(out.traces.begin(), out.traces.end(), a) && in_blocker_trace(c, s_here, a)) {
        accepted.push_back(a);
      }
    }
    out.traces.insert(out.traces.end(), accepted.begin(), accepted.end());
    canonicalize(out.traces);
    max_traces_ = std::max<std::uint64_t>(max_traces_, out.traces.size());
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  std::uint64_t distinct() const { return distinct_; }

 private:
  const VertexSet& s_;
  const Caps& caps_;
  std::unordered_map<ClutterKey, Entry, ClutterKeyHash> memo_;
  std::uint64_t distinct_ = 0;
  std::uint64_t max_traces_ = 0;
};

}  // namespace

bool in_blocker_trace(const Clutter& c, const VertexSet& s, const VertexSet& a) {
  if (!a.is_subset_of(s)) return false;
  const VertexSet w = s - a;
  if (!no_edge_inside(c, w)) return false;
  return assign_private(c, a.to_vector(), a, 0, w);
}

TraceResult trace_blocker(const Hypergraph& h, const VertexSet& s, const Caps& caps) {
  if (!s.is_subset_of(h.vertices())) throw InputError("trace_blocker: S is not inside the vertex set");
  Solver solver(s, caps);
  const Entry& root = solver.solve(minimalize(h), 0);
  TraceResult out;
  out.traces = TraceFamily{s, root.traces};
  out.nodes_explored = root.size;
  out.distinct_nodes = solver.distinct();
  out.max_quasimatching_len = root.qm;
  return out;
}

TraceFamily trace_independent(const Hypergraph& h, const VertexSet& s, const Caps& caps) {
  return complement_trace(trace_blocker(h, s, caps).traces);
}

std::vector<VertexSet> enumerate_mis(const Hypergraph& h, int cap) {
  const Clutter b = blocker_bruteforce(minimalize(h), cap);
  std::vector<VertexSet> out;
  out.reserve(b.edges().size());
  for (const auto& t : b.edges()) out.push_back(h.vertices() - t);
  canonicalize(out);
  return out;
}

}  // namespace mmtw
