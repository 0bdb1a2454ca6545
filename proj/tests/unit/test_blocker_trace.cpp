#include <cmath>

#include "doctest.h"
#include "mmtw/blocker_trace.hpp"
#include "mmtw/decomposition.hpp"
#include "mmtw/errors.hpp"
#include "oracles.hpp"

using namespace mmtw;
using test::Rng;

namespace {

std::vector<VertexSet> expected_trace(const Hypergraph& h, const VertexSet& s) {
  return test::oracle_trace(test::oracle_blocker(h), s);
}

double binomial_sum(int m, int upto) {
  double total = 0;
  double c = 1;
  for (int j = 0; j <= upto && j <= m; ++j) {
    total += c;
    c = c * (m - j) / (j + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("trace of P3 on its endpoints") {
  const Hypergraph p3(3, {{0, 1}, {1, 2}});
  const TraceResult r = trace_blocker(p3, VertexSet{0, 2});
  CHECK(r.traces.base == VertexSet{0, 2});
  CHECK(r.traces.members == std::vector<VertexSet>{{}, {0, 2}});
}

TEST_CASE("trace of 2K2 on one end of each edge") {
  const Hypergraph two(4, {{0, 1}, {2, 3}});
  const TraceResult r = trace_blocker(two, VertexSet{0, 2});
  CHECK(r.traces.members == std::vector<VertexSet>{{}, {0}, {2}, {0, 2}});
  CHECK(r.nodes_explored >= r.traces.members.size());
}

TEST_CASE("empty subset gives the empty trace when a transversal exists") {
  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    const Hypergraph h = test::random_hypergraph(rng, rng.uniform(1, 8), rng.uniform(0, 6), 3);
    CHECK(trace_blocker(h, VertexSet{}).traces.members == std::vector<VertexSet>{{}});
  }
  CHECK(trace_blocker(Hypergraph(2, {{}}), VertexSet{0}).traces.members.empty());
}

TEST_CASE("maximal independent sets") {
  const Hypergraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(enumerate_mis(k3) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(enumerate_mis(Hypergraph(3, {{0, 1}, {1, 2}})) == std::vector<VertexSet>{{1}, {0, 2}});
  CHECK(enumerate_mis(Hypergraph(3)) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK_THROWS_AS(enumerate_mis(Hypergraph(5, {{0, 1}}), 4), ResourceError);
}

TEST_CASE("errors") {
  const Hypergraph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(trace_blocker(p3, VertexSet{5}), InputError);
  Caps tiny;
  tiny.nodes = 1;
  const Hypergraph big = test::complete_graph(8).to_hypergraph();
  CHECK_THROWS_AS(trace_blocker(big, VertexSet::range(8), tiny), ResourceError);
}

TEST_CASE("independent trace is the complemented blocker trace") {
  Rng rng(17);
  for (int round = 0; round < 100; ++round) {
    const Hypergraph h = test::random_hypergraph(rng, rng.uniform(1, 9), rng.uniform(0, 7), 3);
    const VertexSet s = test::random_subset(rng, h.vertices());
    CHECK(trace_independent(h, s).members == test::oracle_trace(test::oracle_mis(h), s));
  }
}

TEST_CASE("property: membership test agrees with the oracle") {
  Rng rng(23);
  for (int round = 0; round < 150; ++round) {
    const Clutter c = test::random_clutter(rng, rng.uniform(1, 8), rng.uniform(0, 6), 3);
    const VertexSet s = test::random_subset(rng, c.vertices());
    const std::vector<VertexSet> want = expected_trace(c, s);
    for (const auto& a : test::all_subsets(s)) {
      CHECK(in_blocker_trace(c, s, a) == std::binary_search(want.begin(), want.end(), a));
    }
  }
}

TEST_CASE("property: trace equals the brute-force trace") {
  Rng rng(29);
  for (int round = 0; round < 300; ++round) {
    const Hypergraph h = test::random_hypergraph(rng, rng.uniform(1, 10), rng.uniform(0, 9), 4);
    const VertexSet s = test::random_subset(rng, h.vertices(), rng.uniform(1, 9) / 10.0);
    const TraceResult r = trace_blocker(h, s);
    CHECK(r.traces.members == expected_trace(h, s));
    for (const auto& a : r.traces.members) CHECK(a.is_subset_of(s));
  }
}

TEST_CASE("property: lower bound and quasimatching length bound") {
  Rng rng(31);
  for (int round = 0; round < 150; ++round) {
    const Hypergraph h = test::random_hypergraph(rng, rng.uniform(1, 7), rng.uniform(1, 6), 3);
    const VertexSet s = test::random_subset(rng, h.vertices());
    const TraceResult r = trace_blocker(h, s);
    const int mu = test::oracle_mu_minor(h, s);
    CHECK(r.traces.members.size() >= (std::size_t{1} << mu));
    const int rank = minimalize(h).rank();
    if (rank >= 2) {
      const long long bound = static_cast<long long>(mu) * (1LL << (rank - 2)) * (2 * rank - 3);
      CHECK(r.max_quasimatching_len <= bound);
    }
  }
}

TEST_CASE("property: independent-set count lies between the matching bounds on graphs") {
  Rng rng(37);
  for (int round = 0; round < 100; ++round) {
    const Graph g = test::random_graph(rng, rng.uniform(1, 10), 0.35);
    const Hypergraph h = g.to_hypergraph();
    const int mu = test::oracle_induced_matching(g, h.vertices());
    const auto mis = enumerate_mis(h);
    CHECK(static_cast<double>(mis.size()) >= std::pow(2.0, mu));
    CHECK(static_cast<double>(mis.size()) <= binomial_sum(g.num_edges(), mu));
  }
}
