#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Raised when a graph construction or a graph-level precondition is violated.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds an edge with endpoints in normalized order.
Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built: every transformation in this library returns a new
/// Graph. Neighbor lists are kept sorted so that equality is structural.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError naming the offending pair on a loop, an out-of-range
  /// endpoint or a duplicate edge.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A graph produced by deleting or merging vertices, with the map from old
/// vertex ids to new ones (kNoVertex for removed vertices).
struct Relabeled {
  Graph graph;
  std::vector<Vertex> mapping;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);
Graph make_graph(std::size_t n, std::initializer_list<Edge> edges);

std::size_t degree(const Graph& g, Vertex v);

/// deg(u) + deg(v) - 2. Throws GraphError if e is not an edge of g.
std::size_t edge_degree(const Graph& g, Edge e);

bool is_connected(const Graph& g);

/// m - n + 1; throws GraphError on a disconnected graph.
std::size_t cyclomatic_number(const Graph& g);

std::vector<Vertex> pendant_vertices(const Graph& g);

/// Removes the given vertices, compacting the remaining ids in order.
Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Strips pendant vertices repeatedly until none remain.
/// Requires a connected graph with at least one cycle.
Relabeled brace_with_mapping(const Graph& g);
Graph brace(const Graph& g);

/// Identifies non-adjacent u and v into one vertex adjacent to N(u) ∪ N(v).
/// The merged vertex takes id min(u, v); ids above max(u, v) shift down by one.
Relabeled fuse_with_mapping(const Graph& g, Vertex u, Vertex v);
Graph fuse(const Graph& g, Vertex u, Vertex v);

/// Line graph; vertex i corresponds to g.edges()[i].
Graph line_graph(const Graph& g);

/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Plain-text edge list: "n m" header followed by m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace zagreb
