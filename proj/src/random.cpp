#include "zagreb/random.hpp"

#include <algorithm>
#include <queue>

namespace zagreb {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw GraphError("empty range");
  // reject the top sliver so every residue is equally likely
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::vector<Vertex> Rng::permutation(std::size_t n) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw GraphError("tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, c));
    if (--remaining[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back(make_edge(a, leaves.top()));
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::size_t n, std::size_t cyclomatic, Rng& rng) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (n == 0 || n - 1 + cyclomatic > pairs) {
    throw GraphError("no connected graph of order " + std::to_string(n) + " has cyclomatic number " +
                     std::to_string(cyclomatic));
  }
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::vector<Edge> free;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) free.push_back({u, v});
    }
  }
  for (std::size_t i = 0; i < cyclomatic; ++i) {
    const std::size_t pick = i + rng.below(free.size() - i);
    std::swap(free[i], free[pick]);
    edges.push_back(free[i]);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, CorpusShape shape) {
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t n = rng.between(shape.min_order, shape.max_order);
    std::size_t c = rng.between(0, shape.max_cyclomatic);
    while (n - 1 + c > n * (n - 1) / 2) c = rng.between(0, shape.max_cyclomatic);
    out.push_back(random_connected_graph(n, c, rng));
  }
  return out;
}

}  // namespace zagreb
