#include "zagreb/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "zagreb/graph6.hpp"

namespace zagreb {

namespace {

using Row = std::uint16_t;

// Colour refinement: start from degrees, split by the sorted multiset of
// neighbour colours until the number of classes stops growing. Colour ids are
// ranks of the signatures, which keeps them isomorphism-invariant.
std::vector<int> refine(std::span<const Row> rows) {
  const std::size_t n = rows.size();
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = std::popcount(rows[v]);

  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (std::size_t w = 0; w < n; ++w) {
        if (rows[v] >> w & 1) around.push_back(color[w]);
      }
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class Search {
 public:
  Search(std::span<const Row> rows, std::vector<int> color)
      : rows_(rows), n_(rows.size()), color_(std::move(color)) {
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
  }

  std::vector<Vertex> run() {
    order_.assign(n_, 0);
    column_.assign(n_, 0);
    run_from(0);
    return best_order_;
  }

 private:
  // Twins u, v of the same colour: the transposition (u v) is an automorphism
  // fixing every placed vertex, so only the first of them needs a branch.
  bool twin_of_earlier(std::size_t v, std::size_t pos) const {
    const Row vbit = Row(1) << v;
    for (std::size_t u = 0; u < v; ++u) {
      if (placed_ >> u & 1 || color_[u] != slot_color_[pos]) continue;
      const Row ubit = Row(1) << u;
      if ((rows_[u] & ~vbit) == (rows_[v] & ~ubit)) return true;
    }
    return false;
  }

  // column p, read as a p-bit number with x(0,p) most significant, is the
  // p-th block of the adjacency string; comparing blocks as integers in
  // order compares the strings lexicographically. below_from_ is the first
  // position where the current prefix is smaller than the best, n if equal.
  void run_from(std::size_t pos) {
    if (pos == n_) {
      if (!have_best_ || below_from_ < n_) {
        have_best_ = true;
        best_order_ = order_;
        best_column_ = column_;
        below_from_ = n_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_ >> v & 1 || color_[v] != slot_color_[pos]) continue;
      if (twin_of_earlier(v, pos)) continue;
      std::uint32_t col = 0;
      for (std::size_t i = 0; i < pos; ++i) col = (col << 1) | (rows_[v] >> order_[i] & 1);
      if (have_best_ && below_from_ >= pos) {
        if (col > best_column_[pos]) continue;
        below_from_ = col < best_column_[pos] ? pos : n_;
      }
      order_[pos] = static_cast<Vertex>(v);
      column_[pos] = col;
      placed_ |= Row(1) << v;
      run_from(pos + 1);
      placed_ &= static_cast<Row>(~(Row(1) << v));
    }
  }

  std::span<const Row> rows_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> column_;
  Row placed_ = 0;
  bool have_best_ = false;
  std::size_t below_from_ = 0;
  std::vector<Vertex> best_order_;
  std::vector<std::uint32_t> best_column_;
};

}  // namespace

Graph canonical_graph(const Graph& g, std::size_t max_order) {
  if (max_order > kMaxCanonicalLimit) {
    throw GraphError("canonical form limit cannot exceed " + std::to_string(kMaxCanonicalLimit));
  }
  if (g.order() > max_order) {
    throw GraphError("canonical form limited to " + std::to_string(max_order) + " vertices, got " +
                     std::to_string(g.order()));
  }
  std::vector<Row> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= Row(1) << e.v;
    rows[e.v] |= Row(1) << e.u;
  }
  Search search(rows, refine(rows));
  // order[p] is the vertex placed at position p; permute wants the inverse
  const auto order = search.run();
  std::vector<Vertex> perm(order.size());
  for (Vertex p = 0; p < order.size(); ++p) perm[order[p]] = p;
  return permute(g, perm);
}

CanonicalForm canonical_form(const Graph& g, std::size_t max_order) {
  return {graph6_encode(canonical_graph(g, max_order))};
}

bool is_isomorphic(const Graph& a, const Graph& b, std::size_t max_order) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace zagreb
