#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmtw {

/// Malformed or contract-violating input (unknown vertex, bad file, invalid tree, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded. Carries whatever partial counters the
/// failing computation had accumulated.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t nodes = 0, std::uint64_t best = 0)
      : std::runtime_error(what), nodes_explored(nodes), best_found(best) {}
  std::uint64_t nodes_explored;
  /// Best lower bound, partial count, or similar; meaning depends on the thrower.
  std::uint64_t best_found;
};

struct Caps {
  std::uint64_t nodes = 10'000'000;   // branch nodes in trace_blocker
  int depth = 4096;                   // recursion depth in trace_blocker
  std::uint64_t table = 1'000'000;    // DP table entries / generator tuples
  std::uint64_t mu_states = 2'000'000;
  std::uint64_t enumeration = 50'000'000;  // guess loops in approx
  int brute_force_vertices = 20;
  int hom_target_vertices = 10;
};

}  // namespace mmtw
