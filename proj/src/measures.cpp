#include "mmtw/measures.hpp"

#include "mmtw/errors.hpp"

namespace mmtw {

namespace {

bool find_independent(const Graph& g, const VertexSet& candidates, int need, std::uint64_t& steps) {
  ++steps;
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  VertexSet rest = candidates;
  for (int v : candidates) {
    rest.erase(v);
    if (find_independent(g, rest - g.neighbors(v), need - 1, steps)) return true;
    if (rest.size() < need) return false;
  }
  return false;
}

bool cover_search(const Hypergraph& h, const VertexSet& uncovered, int k, std::uint64_t& steps) {
  ++steps;
  if (uncovered.empty()) return true;
  if (k == 0) return false;
  const int v = uncovered.front();
  for (const auto& e : h.edges()) {
    if (e.contains(v) && cover_search(h, uncovered - e, k - 1, steps)) return true;
  }
  return false;
}

}  // namespace

bool alpha_decide(const Graph& gaifman_graph, const VertexSet& s, int k, std::uint64_t* steps) {
  std::uint64_t local = 0;
  const bool found = find_independent(gaifman_graph, s, k + 1, local);
  if (steps != nullptr) *steps += local;
  return !found;
}

bool alpha_decide(const Hypergraph& h, const VertexSet& s, int k, std::uint64_t* steps) {
  return alpha_decide(gaifman(h), s, k, steps);
}

bool rho_decide(const Hypergraph& h, const VertexSet& s, int k, std::uint64_t* steps) {
  std::uint64_t local = 0;
  bool ok = false;
  if (s.is_subset_of(h.covered())) ok = cover_search(h, s, k, local);
  if (steps != nullptr) *steps += local;
  return ok;
}

int rho_value(const Hypergraph& h, const VertexSet& s) {
  if (!s.is_subset_of(h.covered())) return kInfinite;
  for (int k = 0;; ++k) {
    if (rho_decide(h, s, k)) return k;
  }
}

std::optional<int> measure_value(MeasureKind m, const Hypergraph& h, const VertexSet& s, int cap) {
  const Graph g = gaifman(h);
  for (int k = 0; k <= cap; ++k) {
    bool ok = false;
    switch (m) {
      case MeasureKind::alpha: ok = alpha_decide(g, s, k); break;
      case MeasureKind::rho: ok = rho_decide(h, s, k); break;
      case MeasureKind::kappa: ok = s.size() - 1 <= k; break;
      case MeasureKind::mu: ok = mu_intersecting(h, s) <= k; break;
    }
    if (ok) return k;
  }
  return std::nullopt;
}

int Measure::value(const VertexSet& s) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  }
  const int v = compute(s);
  std::lock_guard lock(mutex_);
  memo_.emplace(s, v);
  return v;
}

std::optional<int> Measure::value_capped(const VertexSet& s, int cap) const {
  for (int k = 0; k <= cap; ++k) {
    if (decide(s, k)) return k;
  }
  return std::nullopt;
}

bool AlphaMeasure::decide(const VertexSet& s, int k, std::uint64_t* steps) const {
  return alpha_decide(gaifman_graph(), s, k, steps);
}

int AlphaMeasure::compute(const VertexSet& s) const { return alpha_set(gaifman_graph(), s); }

bool RhoMeasure::decide(const VertexSet& s, int k, std::uint64_t* steps) const {
  return rho_decide(hypergraph(), s, k, steps);
}

int RhoMeasure::compute(const VertexSet& s) const { return rho_value(hypergraph(), s); }

std::unique_ptr<Measure> make_measure(MeasureKind m, const Hypergraph& h) {
  switch (m) {
    case MeasureKind::alpha: return std::make_unique<AlphaMeasure>(h);
    case MeasureKind::rho: return std::make_unique<RhoMeasure>(h);
    default: throw InputError("measure " + measure_name(m) + " is not a well-behaved measure here");
  }
}

}  // namespace mmtw
