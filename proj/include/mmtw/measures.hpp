#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "mmtw/decomposition.hpp"
#include "mmtw/hypergraph.hpp"

namespace mmtw {

/// True iff α of the Gaifman graph on S is at most k. Searches for an
/// independent (k+1)-subset of S in increasing id order; `steps` counts search nodes.
bool alpha_decide(const Graph& gaifman_graph, const VertexSet& s, int k, std::uint64_t* steps = nullptr);
bool alpha_decide(const Hypergraph& h, const VertexSet& s, int k, std::uint64_t* steps = nullptr);

/// True iff at most k edges of H cover S. Always false when some vertex of S is in no edge.
bool rho_decide(const Hypergraph& h, const VertexSet& s, int k, std::uint64_t* steps = nullptr);
/// Edge cover number of S, kInfinite when some vertex of S is in no edge.
int rho_value(const Hypergraph& h, const VertexSet& s);

/// Least k ≤ cap with decide(H, S, k), or nullopt past the cap.
std::optional<int> measure_value(MeasureKind m, const Hypergraph& h, const VertexSet& s, int cap);

/// A well-behaved measure bound to one hypergraph, with a cached Gaifman graph
/// and a memo of exact values. Safe to share between threads.
class Measure {
 public:
  virtual ~Measure() = default;

  const Hypergraph& hypergraph() const { return h_; }
  const Graph& gaifman_graph() const { return g_; }
  virtual std::string name() const = 0;
  virtual MeasureKind kind() const = 0;

  virtual bool decide(const VertexSet& s, int k, std::uint64_t* steps = nullptr) const = 0;
  /// Exact value, kInfinite when unbounded. Memoized.
  int value(const VertexSet& s) const;
  /// Least k ≤ cap with decide true, or nullopt.
  std::optional<int> value_capped(const VertexSet& s, int cap) const;

  /// Same measure on another hypergraph.
  virtual std::unique_ptr<Measure> rebind(const Hypergraph& h) const = 0;

 protected:
  explicit Measure(const Hypergraph& h) : h_(h), g_(gaifman(h)) {}
  virtual int compute(const VertexSet& s) const = 0;

 private:
  Hypergraph h_;
  Graph g_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<VertexSet, int, VertexSetHash> memo_;
};

class AlphaMeasure final : public Measure {
 public:
  explicit AlphaMeasure(const Hypergraph& h) : Measure(h) {}
  std::string name() const override { return "alpha"; }
  MeasureKind kind() const override { return MeasureKind::alpha; }
  bool decide(const VertexSet& s, int k, std::uint64_t* steps = nullptr) const override;
  std::unique_ptr<Measure> rebind(const Hypergraph& h) const override { return std::make_unique<AlphaMeasure>(h); }

 protected:
  int compute(const VertexSet& s) const override;
};

class RhoMeasure final : public Measure {
 public:
  explicit RhoMeasure(const Hypergraph& h) : Measure(h) {}
  std::string name() const override { return "rho"; }
  MeasureKind kind() const override { return MeasureKind::rho; }
  bool decide(const VertexSet& s, int k, std::uint64_t* steps = nullptr) const override;
  std::unique_ptr<Measure> rebind(const Hypergraph& h) const override { return std::make_unique<RhoMeasure>(h); }

 protected:
  int compute(const VertexSet& s) const override;
};

/// alpha or rho; throws InputError for other kinds.
std::unique_ptr<Measure> make_measure(MeasureKind m, const Hypergraph& h);

}  // namespace mmtw
