#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// A rewrite site failed its preconditions. The graph is untouched.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RewriteKind { I, II, III, IV };

std::string_view rewrite_name(RewriteKind kind);

// Operation I: u hangs off v carrying only pendant neighbours; move those
// pendants onto v.
struct ShiftPendantsSite {
  Vertex u = 0;
  Vertex v = 0;
};

// Operation II: a path v1..vl whose interior vertices have degree 2. The path
// edges are removed, the endpoints fused into w, and the interior vertices
// plus one new vertex hang off w as pendants.
struct CollapsePathSite {
  std::vector<Vertex> path;
};

// Operation III: a tree hanging at `root` is removed and the edge root-y is
// subdivided by as many new vertices as the tree had besides its root.
struct TreeToPathSite {
  Vertex root = 0;
  std::vector<Vertex> subtree;
  Vertex y = 0;
};

// Operation IV: v's non-pendant neighbours all neighbour u; move v's
// pendants onto u.
struct MergePendantsSite {
  Vertex u = 0;
  Vertex v = 0;
};

using RewriteSpec = std::variant<ShiftPendantsSite, CollapsePathSite, TreeToPathSite, MergePendantsSite>;

RewriteKind kind_of(const RewriteSpec& spec);
std::string describe(const RewriteSpec& spec);

struct RewriteResult {
  Graph graph;
  std::int64_t em1_before = 0;
  std::int64_t em1_after = 0;
  /// mapping[old] is the new id of an old vertex, kNoVertex if it was removed.
  /// New vertices occupy the highest ids of the result.
  std::vector<Vertex> mapping;

  std::int64_t delta() const { return em1_after - em1_before; }
};

/// Required sign of the EM1 change: +1 for an increase, -1 for a decrease.
int expected_direction(RewriteKind kind);

RewriteResult operation_i(const Graph& g, Vertex u, Vertex v);
RewriteResult operation_ii(const Graph& g, std::span<const Vertex> path);
RewriteResult operation_iii(const Graph& g, Vertex root, std::span<const Vertex> subtree, Vertex y);
RewriteResult operation_iv(const Graph& g, Vertex u, Vertex v);

RewriteResult apply_rewrite(const Graph& g, const RewriteSpec& spec);

/// Every site of the given kind whose preconditions hold. Exhaustive for
/// graphs with at most kExhaustiveSiteOrder vertices; above that, Operation III
/// only offers single branches and the union of all branches at each root.
inline constexpr std::size_t kExhaustiveSiteOrder = 12;
std::vector<RewriteSpec> find_applicable(const Graph& g, RewriteKind kind);

}  // namespace zagreb
