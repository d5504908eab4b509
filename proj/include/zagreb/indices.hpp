#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

enum class IndexId { M1, M2, EM1, EM2 };

inline constexpr IndexId kAllIndices[] = {IndexId::M1, IndexId::M2, IndexId::EM1, IndexId::EM2};

struct IndexValue {
  IndexId id;
  std::int64_t value;

  bool operator==(const IndexValue&) const = default;
};

std::string_view index_name(IndexId id);

/// Accepts "m1", "M1", "em2", ... ; nullopt for anything else.
std::optional<IndexId> parse_index(std::string_view text);

/// First Zagreb index: sum of squared vertex degrees.
IndexValue m1(const Graph& g);
/// Second Zagreb index: sum over edges of the endpoint degree product.
IndexValue m2(const Graph& g);
/// Sum over edges of the squared edge degree deg(u) + deg(v) - 2.
IndexValue em1(const Graph& g);
/// Sum over unordered pairs of edges sharing an endpoint of the product of
/// their edge degrees (the second Zagreb index of the line graph).
IndexValue em2(const Graph& g);

IndexValue compute_index(IndexId id, const Graph& g);

/// Same indices from a degree table and an edge list, without building a
/// Graph. Used by the enumeration hot loop; equivalence with the Graph
/// versions is tested.
template <typename Degree>
std::int64_t index_from_degrees(IndexId id, std::span<const Degree> degree, std::span<const Edge> edges) {
  std::int64_t total = 0;
  switch (id) {
    case IndexId::M1:
      for (auto d : degree) total += static_cast<std::int64_t>(d) * d;
      break;
    case IndexId::M2:
      for (const Edge& e : edges) total += static_cast<std::int64_t>(degree[e.u]) * degree[e.v];
      break;
    case IndexId::EM1:
      for (const Edge& e : edges) {
        const std::int64_t de = static_cast<std::int64_t>(degree[e.u]) + degree[e.v] - 2;
        total += de * de;
      }
      break;
    case IndexId::EM2: {
      // per vertex: pairs of incident edges = ((sum d_e)^2 - sum d_e^2) / 2
      constexpr std::size_t kStack = 64;
      std::int64_t sum_buf[kStack] = {};
      std::int64_t sq_buf[kStack] = {};
      const std::size_t n = degree.size();
      std::vector<std::int64_t> sum_heap;
      std::vector<std::int64_t> sq_heap;
      std::int64_t* sum = sum_buf;
      std::int64_t* sq = sq_buf;
      if (n > kStack) {
        sum_heap.assign(n, 0);
        sq_heap.assign(n, 0);
        sum = sum_heap.data();
        sq = sq_heap.data();
      }
      for (const Edge& e : edges) {
        const std::int64_t de = static_cast<std::int64_t>(degree[e.u]) + degree[e.v] - 2;
        sum[e.u] += de;
        sum[e.v] += de;
        sq[e.u] += de * de;
        sq[e.v] += de * de;
      }
      for (std::size_t v = 0; v < n; ++v) total += (sum[v] * sum[v] - sq[v]) / 2;
      break;
    }
  }
  return total;
}

}  // namespace zagreb
