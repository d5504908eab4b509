#include "zagreb/indices.hpp"

#include <cctype>
#include <string>

namespace zagreb {

std::string_view index_name(IndexId id) {
  switch (id) {
    case IndexId::M1: return "M1";
    case IndexId::M2: return "M2";
    case IndexId::EM1: return "EM1";
    case IndexId::EM2: return "EM2";
  }
  return "?";
}

std::optional<IndexId> parse_index(std::string_view text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (IndexId id : kAllIndices) {
    if (index_name(id) == upper) return id;
  }
  return std::nullopt;
}

IndexValue m1(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    total += d * d;
  }
  return {IndexId::M1, total};
}

IndexValue m2(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    total += static_cast<std::int64_t>(g.degree(e.u)) * static_cast<std::int64_t>(g.degree(e.v));
  }
  return {IndexId::M2, total};
}

IndexValue em1(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    const auto de = static_cast<std::int64_t>(edge_degree(g, e));
    total += de * de;
  }
  return {IndexId::EM1, total};
}

IndexValue em2(const Graph& g) {
  // walk each vertex's incident edges pairwise; each adjacent pair shares
  // exactly one endpoint in a simple graph, so it is counted once
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto around = g.neighbors(v);
    for (std::size_t a = 0; a < around.size(); ++a) {
      const auto da = static_cast<std::int64_t>(edge_degree(g, make_edge(v, around[a])));
      for (std::size_t b = a + 1; b < around.size(); ++b) {
        total += da * static_cast<std::int64_t>(edge_degree(g, make_edge(v, around[b])));
      }
    }
  }
  return {IndexId::EM2, total};
}

IndexValue compute_index(IndexId id, const Graph& g) {
  switch (id) {
    case IndexId::M1: return m1(g);
    case IndexId::M2: return m2(g);
    case IndexId::EM1: return em1(g);
    case IndexId::EM2: return em2(g);
  }
  throw GraphError("unknown index");
}

}  // namespace zagreb
