#include "zagreb/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "zagreb/graph6.hpp"

namespace zagreb {

std::size_t default_order_cap(std::size_t cyclomatic) { return cyclomatic >= 3 ? 8 : 9; }

void validate(const EnumSpec& spec) {
  if (spec.n < 1) throw EnumerationError("order must be at least 1");
  if (spec.n > kMaxEnumOrder) {
    throw EnumerationError("order " + std::to_string(spec.n) + " exceeds the enumeration limit of " +
                           std::to_string(kMaxEnumOrder));
  }
  const std::size_t pairs = spec.n * (spec.n - 1) / 2;
  if (spec.edge_count() > pairs) {
    throw EnumerationError("no simple graph on " + std::to_string(spec.n) + " vertices has cyclomatic number " +
                           std::to_string(spec.cyclomatic));
  }
  const std::size_t cap = spec.allow_large ? kMaxEnumOrder : default_order_cap(spec.cyclomatic);
  if (spec.n > cap) {
    throw EnumerationError("order " + std::to_string(spec.n) + " with cyclomatic number " +
                           std::to_string(spec.cyclomatic) + " is above the default cap of " +
                           std::to_string(cap) + "; pass --allow-large to run it anyway");
  }
  if (!spec.edge_order.empty()) {
    if (spec.edge_order.size() != pairs) throw EnumerationError("edge order must list every vertex pair");
    std::vector<char> hit(pairs, 0);
    for (std::size_t i : spec.edge_order) {
      if (i >= pairs || hit[i]) throw EnumerationError("edge order is not a permutation");
      hit[i] = 1;
    }
  }
}

std::vector<Edge> vertex_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const auto pairs = vertex_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) edges.push_back(pairs[i]);
  }
  return Graph::from_edges(n, edges);
}

Graph EdgeSubset::to_graph() const { return Graph::from_edges(n, edges); }

namespace detail {

EdgeSearch::EdgeSearch(const EnumSpec& spec)
    : n_(spec.n),
      m_(spec.edge_count()),
      c_(spec.cyclomatic),
      all_(static_cast<Row>((1u << spec.n) - 1)),
      pairs_(vertex_pairs(spec.n)) {
  order_ = spec.edge_order;
  if (order_.empty()) {
    order_.resize(pairs_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }
  const std::size_t len = pairs_.size();
  std::vector<std::size_t> last(n_, 0);
  std::vector<char> seen(n_, 0);
  for (std::size_t p = 0; p < len; ++p) {
    const Edge e = pairs_[order_[p]];
    last[e.u] = last[e.v] = p + 1;
    seen[e.u] = seen[e.v] = 1;
  }
  finished_.assign(len + 1, 0);
  newly_finished_.assign(len + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    // a vertex with no pairs at all (n = 1) is finished from the start
    const std::size_t p = seen[v] ? last[v] : 0;
    for (std::size_t q = p; q <= len; ++q) finished_[q] |= static_cast<Row>(Row(1) << v);
    newly_finished_[p] |= static_cast<Row>(Row(1) << v);
  }
  shard_depth_ = std::min<std::size_t>(len, 10);
}

}  // namespace detail

EnumSummary enumerate_connected(const EnumSpec& spec, const std::function<void(const EdgeSubset&)>& visit) {
  return {for_each_connected(spec, visit)};
}

void ExtremalTracker::observe(std::int64_t value, std::uint64_t mask) {
  if (empty) {
    empty = false;
    min_value = max_value = value;
    min_masks = {mask};
    max_masks = {mask};
    return;
  }
  if (value < min_value) {
    min_value = value;
    min_masks.clear();
  }
  if (value == min_value) min_masks.push_back(mask);
  if (value > max_value) {
    max_value = value;
    max_masks.clear();
  }
  if (value == max_value) max_masks.push_back(mask);
}

void ExtremalTracker::merge(const ExtremalTracker& other) {
  if (other.empty) return;
  if (empty) {
    *this = other;
    return;
  }
  if (other.min_value < min_value) {
    min_value = other.min_value;
    min_masks = other.min_masks;
  } else if (other.min_value == min_value) {
    min_masks.insert(min_masks.end(), other.min_masks.begin(), other.min_masks.end());
  }
  if (other.max_value > max_value) {
    max_value = other.max_value;
    max_masks = other.max_masks;
  } else if (other.max_value == max_value) {
    max_masks.insert(max_masks.end(), other.max_masks.begin(), other.max_masks.end());
  }
}

void ExtremalTracker::finalize() {
  std::sort(min_masks.begin(), min_masks.end());
  std::sort(max_masks.begin(), max_masks.end());
}

namespace {

ExtremeSide summarize(std::size_t n, std::int64_t value, const std::vector<std::uint64_t>& masks, bool dedup) {
  ExtremeSide side;
  side.value = value;
  side.labeled_witnesses = masks.size();
  if (dedup) {
    // most labelings of one class share a sorted degree sequence; canonicalizing
    // everything is still cheap at n <= 9
    std::set<std::string> classes;
    for (std::uint64_t mask : masks) classes.insert(canonical_form(graph_from_mask(n, mask)).bytes);
    side.witnesses.assign(classes.begin(), classes.end());
  } else {
    for (std::uint64_t mask : masks) side.witnesses.push_back(graph6_encode(graph_from_mask(n, mask)));
    std::sort(side.witnesses.begin(), side.witnesses.end());
  }
  return side;
}

}  // namespace

ExtremalReport extremal_scan(const EnumSpec& spec, IndexId index) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = std::max<std::size_t>(1, spec.workers);
  std::vector<ExtremalTracker> trackers(workers);
  const std::uint64_t visited = for_each_connected_parallel(spec, workers, [&](std::size_t w) {
    return [&tracker = trackers[w], index](const EdgeSubset& g) {
      tracker.observe(index_from_degrees<std::uint8_t>(index, g.degree, g.edges), g.mask);
    };
  });
  ExtremalTracker total;
  for (const auto& t : trackers) total.merge(t);
  total.finalize();

  ExtremalReport report;
  report.n = spec.n;
  report.cyclomatic = spec.cyclomatic;
  report.index = index;
  report.labeled_graphs = visited;
  report.deduplicated = spec.dedup;
  if (!total.empty) {
    report.min = summarize(spec.n, total.min_value, total.min_masks, spec.dedup);
    report.max = summarize(spec.n, total.max_value, total.max_masks, spec.dedup);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CanonicalForm> brace_census(const EnumSpec& spec) {
  if (spec.cyclomatic < 1) throw EnumerationError("brace census needs cyclomatic number >= 1");
  const std::size_t workers = std::max<std::size_t>(1, spec.workers);
  std::vector<std::set<CanonicalForm>> found(workers);
  for_each_connected_parallel(spec, workers, [&](std::size_t w) {
    return [&seen = found[w]](const EdgeSubset& g) {
      for (std::size_t v = 0; v < g.n; ++v) {
        if (g.degree[v] < 2) return;
      }
      seen.insert(canonical_form(g.to_graph()));
    };
  });
  std::set<CanonicalForm> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

std::vector<Graph> connected_graph_classes(std::size_t n, std::size_t workers) {
  workers = std::max<std::size_t>(1, workers);
  std::vector<Graph> out;
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::size_t m = n - 1; m <= pairs; ++m) {
    EnumSpec spec;
    spec.n = n;
    spec.cyclomatic = m + 1 - n;
    spec.allow_large = true;
    std::vector<std::unordered_set<std::string>> found(workers);
    for_each_connected_parallel(spec, workers, [&](std::size_t w) {
      return [&seen = found[w]](const EdgeSubset& g) { seen.insert(canonical_form(g.to_graph()).bytes); };
    });
    std::set<std::string> merged;
    for (auto& s : found) merged.insert(s.begin(), s.end());
    for (const auto& text : merged) out.push_back(graph6_decode(text));
  }
  return out;
}

}  // namespace zagreb
