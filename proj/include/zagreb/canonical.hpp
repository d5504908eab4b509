#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr std::size_t kDefaultCanonicalLimit = 10;
inline constexpr std::size_t kMaxCanonicalLimit = 16;

/// Isomorphism-class identifier. The bytes are the graph6 text of the
/// canonically relabeled graph, so a form can be printed or decoded directly.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Minimum upper-triangle adjacency string over all vertex orders that agree
/// with the iterated degree refinement of the vertex partition.
/// Throws GraphError when g.order() > max_order.
CanonicalForm canonical_form(const Graph& g, std::size_t max_order = kDefaultCanonicalLimit);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g, std::size_t max_order = kDefaultCanonicalLimit);

bool is_isomorphic(const Graph& a, const Graph& b, std::size_t max_order = kDefaultCanonicalLimit);

}  // namespace zagreb

template <>
struct std::hash<zagreb::CanonicalForm> {
  std::size_t operator()(const zagreb::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
