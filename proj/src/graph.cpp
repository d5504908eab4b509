#include "zagreb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zagreb {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  if (n >= kNoVertex) throw GraphError("graph order too large");
  Graph g;
  g.adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge " + pair_text(e.u, e.v) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("edge " + pair_text(e.u, e.v) + " is a loop");
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = g.adjacency_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw GraphError("edge " + pair_text(static_cast<Vertex>(std::min<std::size_t>(v, *dup)),
                                           static_cast<Vertex>(std::max<std::size_t>(v, *dup))) +
                       " is duplicated");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(adjacency_.size()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = adjacency_[v].size();
  return out;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, edges);
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t edge_degree(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError(pair_text(e.u, e.v) + " is not an edge");
  return g.degree(e.u) + g.degree(e.v) - 2;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::size_t cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw GraphError("cyclomatic number requires a connected graph");
  return g.size() + 1 - g.order();
}

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.order();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (v >= n) throw GraphError("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> mapping(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[v]) mapping[v] = next++;
  }
  if (next == 0) throw GraphError("deleting every vertex leaves no graph");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) kept.push_back({mapping[e.u], mapping[e.v]});
  }
  return {Graph::from_edges(next, kept), std::move(mapping)};
}

Relabeled brace_with_mapping(const Graph& g) {
  if (!is_connected(g) || g.size() < g.order()) {
    throw GraphError("brace requires a connected graph containing a cycle");
  }
  const std::size_t n = g.order();
  auto deg = g.degrees();
  std::vector<char> gone(n, 0);
  std::vector<Vertex> queue = pendant_vertices(g);
  std::vector<Vertex> removed;
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (gone[v] || deg[v] != 1) continue;
    gone[v] = 1;
    removed.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  return delete_vertices(g, removed);
}

Graph brace(const Graph& g) { return brace_with_mapping(g).graph; }

Relabeled fuse_with_mapping(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("cannot fuse vertex " + std::to_string(u) + " with itself");
  if (g.has_edge(u, v)) {
    throw GraphError("cannot fuse adjacent vertices " + pair_text(u, v) + " without a loop");
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  std::vector<Vertex> mapping(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    mapping[x] = x == drop ? keep : (x > drop ? x - 1 : x);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(mapping[e.u], mapping[e.v]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Graph::from_edges(g.order() - 1, edges), std::move(mapping)};
}

Graph fuse(const Graph& g, Vertex u, Vertex v) { return fuse_with_mapping(g, u, v).graph; }

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw GraphError("line graph of an edgeless graph is empty");
  // incident[v] lists the indices of edges touching v
  std::vector<std::vector<Vertex>> incident(g.order());
  for (Vertex i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto& around : incident) {
    for (std::size_t a = 0; a < around.size(); ++a) {
      for (std::size_t b = a + 1; b < around.size(); ++b) {
        out.push_back(make_edge(around[a], around[b]));
      }
    }
  }
  return Graph::from_edges(edges.size(), out);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation length does not match order");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw GraphError("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph::from_edges(g.order(), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) {
    throw GraphError("edge list must start with 'n m' (n >= 1, m >= 0)");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) {
      throw GraphError("edge list line " + std::to_string(i + 2) + ": expected 'u v'");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge list line " + std::to_string(i + 2) + ": vertex out of range");
    }
    edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  std::string rest;
  if (in >> rest) throw GraphError("edge list has trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace zagreb
