#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zagreb/canonical.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxEnumOrder = 9;

struct EnumSpec {
  std::size_t n = 1;
  std::size_t cyclomatic = 0;
  /// Collapse witnesses to isomorphism classes.
  bool dedup = true;
  std::size_t workers = 1;
  /// Lifts the default order cap for c >= 3 from 8 to 9.
  bool allow_large = false;
  /// Optional traversal order: a permutation of the pair indices 0..C(n,2)-1.
  /// Empty means lexicographic. Results must not depend on it.
  std::vector<std::size_t> edge_order;

  std::size_t edge_count() const { return n - 1 + cyclomatic; }
};

/// Default order cap for a cyclomatic number without --allow-large.
std::size_t default_order_cap(std::size_t cyclomatic);

/// Throws EnumerationError when the spec is invalid or over its cap.
void validate(const EnumSpec& spec);

/// Pairs (u, v), u < v, in lexicographic order; bit i of an edge mask is pair i.
std::vector<Edge> vertex_pairs(std::size_t n);

Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// A labeled graph produced by the enumerator. Views are only valid for the
/// duration of the visitor call.
struct EdgeSubset {
  std::size_t n;
  std::uint64_t mask;
  std::span<const std::uint8_t> degree;
  std::span<const Edge> edges;

  Graph to_graph() const;
};

namespace detail {

// Depth-first search over the edge sequence, choosing or skipping each pair.
// Branches are cut when
//   * too few pairs remain to reach m edges,
//   * an added edge would close more than c independent cycles, or
//   * a component made only of finished vertices (all their pairs already
//     decided) is not the whole vertex set, so connectivity is lost.
class EdgeSearch {
 public:
  explicit EdgeSearch(const EnumSpec& spec);

  /// Nodes at this depth are the unit of work handed out to workers.
  std::size_t shard_depth() const { return shard_depth_; }

  template <typename Visit>
  std::uint64_t run(Visit& visit, std::atomic<std::size_t>* claims) {
    claims_ = claims;
    node_index_ = 0;
    claimed_ = claims ? claims->fetch_add(1) : 0;
    visited_ = 0;
    descend(0, visit);
    return visited_;
  }

 private:
  using Row = std::uint16_t;

  Row component(std::size_t v) const {
    Row reach = static_cast<Row>(Row(1) << v);
    Row frontier = reach;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= static_cast<Row>(f - 1)) next |= rows_[std::countr_zero(f)];
      frontier = static_cast<Row>(next & ~reach);
      reach |= next;
    }
    return reach;
  }

  bool finished_ok(std::size_t pos) const {
    const Row fresh = newly_finished_[pos];
    if (!fresh) return true;
    const Row done = finished_[pos];
    for (Row f = fresh; f; f &= static_cast<Row>(f - 1)) {
      const Row comp = component(std::countr_zero(f));
      if (comp != all_ && (comp & ~done) == 0) return false;
    }
    return true;
  }

  template <typename Visit>
  void descend(std::size_t pos, Visit& visit) {
    if (claims_ && (pos == shard_depth_ || (pos < shard_depth_ && chosen_ == m_))) {
      const std::size_t here = node_index_++;
      if (here != claimed_) return;
      claimed_ = claims_->fetch_add(1);
    }
    if (chosen_ == m_) {
      if (component(0) != all_) return;
      ++visited_;
      visit(EdgeSubset{n_, mask_, std::span<const std::uint8_t>(degree_.data(), n_),
                       std::span<const Edge>(edges_.data(), chosen_)});
      return;
    }
    if (pairs_.size() - pos < m_ - chosen_) return;

    const std::size_t idx = order_[pos];
    const Edge e = pairs_[idx];
    const bool closes_cycle = (component(e.u) >> e.v) & 1;
    if (!closes_cycle || cycles_ < c_) {
      rows_[e.u] |= static_cast<Row>(Row(1) << e.v);
      rows_[e.v] |= static_cast<Row>(Row(1) << e.u);
      ++degree_[e.u];
      ++degree_[e.v];
      edges_[chosen_++] = e;
      mask_ |= std::uint64_t{1} << idx;
      cycles_ += closes_cycle ? 1 : 0;
      if (finished_ok(pos + 1)) descend(pos + 1, visit);
      cycles_ -= closes_cycle ? 1 : 0;
      mask_ &= ~(std::uint64_t{1} << idx);
      --chosen_;
      --degree_[e.u];
      --degree_[e.v];
      rows_[e.u] &= static_cast<Row>(~(Row(1) << e.v));
      rows_[e.v] &= static_cast<Row>(~(Row(1) << e.u));
    }
    if (finished_ok(pos + 1)) descend(pos + 1, visit);
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t c_;
  Row all_;
  std::vector<Edge> pairs_;
  std::vector<std::size_t> order_;
  std::vector<Row> finished_;        // finished_[p]: vertices with no pair at positions >= p
  std::vector<Row> newly_finished_;  // finished at p but not at p-1
  std::size_t shard_depth_;

  std::array<Row, 16> rows_{};
  std::array<std::uint8_t, 16> degree_{};
  std::array<Edge, 64> edges_{};
  std::size_t chosen_ = 0;
  std::size_t cycles_ = 0;
  std::uint64_t mask_ = 0;
  std::uint64_t visited_ = 0;

  std::atomic<std::size_t>* claims_ = nullptr;
  std::size_t node_index_ = 0;
  std::size_t claimed_ = 0;
};

}  // namespace detail

/// Calls visit once per labeled connected graph on 0..n-1 with exactly
/// n-1+c edges. Single-threaded; returns the number of graphs visited.
template <typename Visit>
std::uint64_t for_each_connected(const EnumSpec& spec, Visit&& visit) {
  validate(spec);
  detail::EdgeSearch search(spec);
  return search.run(visit, nullptr);
}

/// Same traversal split across `workers` threads. make_visitor(worker) builds
/// one visitor per worker; visitors never run concurrently with themselves.
/// Returns the total visit count.
template <typename MakeVisitor>
std::uint64_t for_each_connected_parallel(const EnumSpec& spec, std::size_t workers, MakeVisitor&& make_visitor);

struct EnumSummary {
  std::uint64_t labeled_graphs = 0;
};

EnumSummary enumerate_connected(const EnumSpec& spec, const std::function<void(const EdgeSubset&)>& visit);

/// Running extremum of an index with every labeled graph attaining it.
/// merge() is associative and commutative once finalize() sorts the masks.
struct ExtremalTracker {
  bool empty = true;
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  std::vector<std::uint64_t> min_masks;
  std::vector<std::uint64_t> max_masks;

  void observe(std::int64_t value, std::uint64_t mask);
  void merge(const ExtremalTracker& other);
  void finalize();
};

struct ExtremeSide {
  std::int64_t value = 0;
  std::uint64_t labeled_witnesses = 0;
  /// graph6 text: canonical forms when deduplicated, labeled graphs otherwise; sorted.
  std::vector<std::string> witnesses;
};

struct ExtremalReport {
  std::size_t n = 0;
  std::size_t cyclomatic = 0;
  IndexId index = IndexId::EM1;
  std::uint64_t labeled_graphs = 0;
  bool deduplicated = true;
  ExtremeSide min;
  ExtremeSide max;
  double wall_seconds = 0.0;
};

ExtremalReport extremal_scan(const EnumSpec& spec, IndexId index);

/// Canonical forms of the pendant-free graphs (minimum degree >= 2) in the
/// class, sorted. Requires c >= 1.
std::vector<CanonicalForm> brace_census(const EnumSpec& spec);

/// One representative (canonical labeling) of every connected graph on n
/// vertices, every cyclomatic number, sorted by (m, graph6).
std::vector<Graph> connected_graph_classes(std::size_t n, std::size_t workers = 1);

}  // namespace zagreb

#include "zagreb/enumerate_parallel.hpp"
