#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations, so a seed names the same corpus everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  std::vector<Vertex> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Uniform labeled tree (random Pruefer sequence).
Graph random_tree(std::size_t n, Rng& rng);

/// Uniform spanning tree plus `cyclomatic` distinct random non-edges.
/// Throws GraphError if the order cannot hold that many extra edges.
Graph random_connected_graph(std::size_t n, std::size_t cyclomatic, Rng& rng);

struct CorpusShape {
  std::size_t min_order = 4;
  std::size_t max_order = 12;
  std::size_t max_cyclomatic = 4;
};

/// `count` connected graphs; order and cyclomatic number are drawn uniformly
/// and the cyclomatic number is redrawn until it fits the order.
std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, CorpusShape shape = {});

}  // namespace zagreb
