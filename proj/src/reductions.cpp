#include "mmtw/reductions.hpp"

#include "mmtw/errors.hpp"

namespace mmtw {

namespace {

void require_valid(const Hypergraph& h, const TreeDecomposition& t, const char* what) {
  const Validity v = validate(h, t);
  if (!v.valid) throw InputError(std::string(what) + ": " + v.defect);
}

}  // namespace

std::string PendantExtension::origin(int w) const {
  return w < n() ? std::to_string(w + 1) : std::to_string(w - n() + 1) + "'";
}

PendantExtension pendant_extend(const Graph& g) {
  PendantExtension x{g, Graph(2 * g.n())};
  for (auto [u, v] : g.edge_list()) x.extended.add_edge(u, v);
  for (int v = 0; v < g.n(); ++v) x.extended.add_edge(v, v + g.n());
  return x;
}

TreeDecomposition pendant_pullback(const PendantExtension& x, const TreeDecomposition& t) {
  require_valid(x.extended.to_hypergraph(), t, "pendant_pullback");
  const VertexSet keep = VertexSet::range(x.n());
  TreeDecomposition out = t;
  out.num_vertices = x.n();
  for (auto& b : out.bags) b &= keep;
  return out;
}

TreeDecomposition pendant_push(const PendantExtension& x, const TreeDecomposition& t) {
  require_valid(x.original.to_hypergraph(), t, "pendant_push");
  TreeDecomposition out = t;
  out.num_vertices = 2 * x.n();
  for (int v = 0; v < x.n(); ++v) {
    int host = 0;
    for (int i = 0; i < t.num_nodes(); ++i) {
      if (t.bags[static_cast<std::size_t>(i)].contains(v)) {
        host = i;
        break;
      }
    }
    out.add_node(VertexSet{v, x.partner(v)}, out.num_nodes() == 0 ? -1 : host);
  }
  return out;
}

VertexSet LineSquare::lift(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out |= incident[static_cast<std::size_t>(v)];
  return out;
}

std::string LineSquare::origin(int e) const {
  const auto [u, v] = edge_of[static_cast<std::size_t>(e)];
  return std::to_string(u + 1) + "-" + std::to_string(v + 1);
}

LineSquare line_square(const Graph& g) {
  LineSquare x;
  x.original = g;
  x.edge_of = g.edge_list();
  const int m = static_cast<int>(x.edge_of.size());
  x.line = Graph(m);
  x.incident.assign(static_cast<std::size_t>(g.n()), VertexSet{});
  for (int e = 0; e < m; ++e) {
    auto [u, v] = x.edge_of[static_cast<std::size_t>(e)];
    x.incident[static_cast<std::size_t>(u)].insert(e);
    x.incident[static_cast<std::size_t>(v)].insert(e);
  }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = x.edge_of[static_cast<std::size_t>(e)];
    const VertexSet close = (g.neighbors(u) | g.neighbors(v)).with(u).with(v);
    for (int f : x.lift(close)) {
      if (f > e) x.line.add_edge(e, f);
    }
  }
  return x;
}

LinePullback line_square_pullback(const LineSquare& x, const TreeDecomposition& t) {
  require_valid(x.line.to_hypergraph(), t, "line_square_pullback");
  LinePullback out;
  out.decomposition.edges = t.edges;
  out.decomposition.num_vertices = x.original.n();
  for (const auto& b : t.bags) {
    VertexSet s;
    for (int v = 0; v < x.original.n(); ++v) {
      const VertexSet& inc = x.incident[static_cast<std::size_t>(v)];
      if (!inc.empty() && inc.is_subset_of(b)) s.insert(v);
    }
    out.decomposition.bags.push_back(std::move(s));
  }
  for (int v = 0; v < x.original.n(); ++v) {
    if (x.incident[static_cast<std::size_t>(v)].empty()) out.isolated.insert(v);
  }
  if (!out.isolated.empty()) {
    if (out.decomposition.bags.empty()) out.decomposition.bags.emplace_back();
    out.decomposition.bags.front() |= out.isolated;
  }
  return out;
}

TreeDecomposition line_square_push(const LineSquare& x, const TreeDecomposition& t) {
  require_valid(x.original.to_hypergraph(), t, "line_square_push");
  TreeDecomposition out = t;
  out.num_vertices = x.line.n();
  for (auto& b : out.bags) b = x.lift(b);
  return out;
}

MuApproxResult approximate_mu_tw(const Graph& g, int k, const Caps& caps) {
  if (k < 1) throw InputError("approximate_mu_tw: k must be at least 1");
  const LineSquare x = line_square(g);
  const ApproxResult r = approx_tree_decomposition(x.line.to_hypergraph(), k, MeasureKind::alpha, caps);
  MuApproxResult out;
  out.calls = r.calls;
  if (r.refuted) {
    out.refuted = true;
    return out;
  }
  LinePullback back = line_square_pullback(x, r.decomposition);
  out.decomposition = normalize(back.decomposition);
  out.isolated = back.isolated;
  return out;
}

}  // namespace mmtw
