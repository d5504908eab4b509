#include "zagreb/operations.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "zagreb/indices.hpp"

namespace zagreb {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

bool in_range(const Graph& g, Vertex v) { return v < g.order(); }

bool is_pendant(const Graph& g, Vertex v) { return g.degree(v) == 1; }

std::vector<Vertex> pendant_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (is_pendant(g, w)) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> core_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (!is_pendant(g, w)) out.push_back(w);
  }
  return out;
}

RewriteResult finish(const Graph& before, Graph after, std::vector<Vertex> mapping) {
  RewriteResult r;
  r.em1_before = em1(before).value;
  r.em1_after = em1(after).value;
  r.graph = std::move(after);
  r.mapping = std::move(mapping);
  return r;
}

std::vector<Vertex> identity_mapping(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return m;
}

// Each check returns an empty string when the site is valid, otherwise the
// reason it is not.

std::string check_i(const Graph& g, Vertex u, Vertex v) {
  if (!in_range(g, u) || !in_range(g, v)) return "vertex out of range";
  if (!g.has_edge(u, v)) return "(" + vtx(u) + "," + vtx(v) + ") is not an edge";
  if (g.degree(v) < 2) return "v=" + vtx(v) + " must have degree at least 2";
  std::size_t pendants = 0;
  for (Vertex w : g.neighbors(u)) {
    if (w == v) continue;
    if (!is_pendant(g, w)) return "u=" + vtx(u) + " has non-pendant neighbour " + vtx(w) + " other than v";
    ++pendants;
  }
  if (pendants == 0) return "u=" + vtx(u) + " has no pendant neighbours to move";
  return {};
}

std::string check_ii(const Graph& g, std::span<const Vertex> path) {
  if (path.size() < 3) return "path needs at least 3 vertices";
  std::vector<char> on_path(g.order(), 0);
  for (Vertex x : path) {
    if (!in_range(g, x)) return "vertex " + vtx(x) + " out of range";
    if (on_path[x]) return "path repeats vertex " + vtx(x);
    on_path[x] = 1;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      return "(" + vtx(path[i]) + "," + vtx(path[i + 1]) + ") is not an edge";
    }
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (g.degree(path[i]) != 2) return "interior vertex " + vtx(path[i]) + " does not have degree 2";
  }
  const Vertex u = path.front();
  const Vertex v = path.back();
  if (g.has_edge(u, v)) return "endpoints " + vtx(u) + " and " + vtx(v) + " are adjacent";
  for (Vertex end : {u, v}) {
    std::size_t outside = 0;
    for (Vertex w : g.neighbors(end)) outside += on_path[w] ? 0 : 1;
    if (outside < 2) return "endpoint " + vtx(end) + " needs at least 2 neighbours off the path";
  }
  for (Vertex w : g.neighbors(u)) {
    if (!on_path[w] && g.has_edge(w, v)) {
      return "endpoints share neighbour " + vtx(w) + "; fusing them would merge edges";
    }
  }
  return {};
}

std::string check_iii(const Graph& g, Vertex root, std::span<const Vertex> subtree, Vertex y) {
  if (!in_range(g, root) || !in_range(g, y)) return "vertex out of range";
  if (subtree.empty()) return "subtree must contain at least one vertex besides the root";
  std::vector<char> inside(g.order(), 0);
  for (Vertex s : subtree) {
    if (!in_range(g, s)) return "vertex " + vtx(s) + " out of range";
    if (s == root) return "subtree must not list the root";
    if (inside[s]) return "subtree repeats vertex " + vtx(s);
    inside[s] = 1;
  }
  if (inside[y] || y == root) return "y must lie outside the subtree";
  if (!g.has_edge(root, y)) return "(" + vtx(root) + "," + vtx(y) + ") is not an edge";

  std::size_t doubled_inner = 0;
  std::size_t root_links = 0;
  for (Vertex s : subtree) {
    for (Vertex w : g.neighbors(s)) {
      if (inside[w]) {
        ++doubled_inner;
      } else if (w == root) {
        ++root_links;
      } else {
        return "subtree vertex " + vtx(s) + " is attached to " + vtx(w) + " outside the root";
      }
    }
  }
  if (doubled_inner / 2 + root_links != subtree.size()) return "subtree with its root does not induce a tree";
  // connectivity of subtree + root: walk from the root inside the subtree
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != subtree.size()) return "subtree with its root does not induce a tree";

  std::size_t outside = g.degree(root) - root_links;
  if (outside < 2) return "root " + vtx(root) + " needs at least 2 neighbours outside the subtree";
  return {};
}

std::string check_iv(const Graph& g, Vertex u, Vertex v) {
  if (!in_range(g, u) || !in_range(g, v)) return "vertex out of range";
  if (u == v) return "u and v must differ";
  if (g.has_edge(u, v)) return "u=" + vtx(u) + " and v=" + vtx(v) + " are adjacent";
  const auto v_pendants = pendant_neighbors(g, v);
  if (v_pendants.empty()) return "v=" + vtx(v) + " has no pendant neighbours";
  const auto v_core = core_neighbors(g, v);
  if (v_core.empty()) return "v=" + vtx(v) + " has no non-pendant neighbour";
  const auto u_core = core_neighbors(g, u);
  if (!std::includes(u_core.begin(), u_core.end(), v_core.begin(), v_core.end())) {
    return "non-pendant neighbours of v are not all neighbours of u";
  }
  // twins: the rewrite would only swap u and v
  if (g.degree(u) <= v_core.size()) {
    return "u and v are twins and u carries no pendants; the rewrite would be an isomorphism";
  }
  return {};
}

template <typename Check, typename... Args>
void require(Check check, const Graph& g, std::string_view op, Args&&... args) {
  std::string why = check(g, std::forward<Args>(args)...);
  if (!why.empty()) throw PreconditionError("operation " + std::string(op) + ": " + why);
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> xs) {
  std::vector<Vertex> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Branches at root: components of G - root that are trees joined to root by
// exactly one edge.
std::vector<std::vector<Vertex>> hanging_branches(const Graph& g, Vertex root) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  seen[root] = 1;
  for (Vertex start : g.neighbors(root)) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = 1;
    std::size_t degree_sum = 0;
    std::size_t root_links = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (w == root) {
          ++root_links;
          continue;
        }
        ++degree_sum;
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    if (root_links == 1 && degree_sum / 2 + 1 == comp.size()) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  return out;
}

void collect_iii(const Graph& g, std::vector<RewriteSpec>& out) {
  for (Vertex root = 0; root < g.order(); ++root) {
    if (g.degree(root) < 3) continue;
    const auto branches = hanging_branches(g, root);
    if (branches.empty()) continue;
    const std::size_t b = branches.size();

    std::vector<std::vector<std::size_t>> choices;
    if (g.order() <= kExhaustiveSiteOrder && b < 20) {
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << b); ++mask) {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < b; ++i) {
          if (mask >> i & 1) pick.push_back(i);
        }
        choices.push_back(std::move(pick));
      }
    } else {
      for (std::size_t i = 0; i < b; ++i) choices.push_back({i});
      if (b > 1) {
        std::vector<std::size_t> all(b);
        std::iota(all.begin(), all.end(), std::size_t{0});
        choices.push_back(std::move(all));
      }
    }

    for (const auto& pick : choices) {
      if (g.degree(root) - pick.size() < 2) continue;
      std::vector<Vertex> subtree;
      for (std::size_t i : pick) subtree.insert(subtree.end(), branches[i].begin(), branches[i].end());
      std::sort(subtree.begin(), subtree.end());
      for (Vertex y : g.neighbors(root)) {
        if (std::binary_search(subtree.begin(), subtree.end(), y)) continue;
        if (check_iii(g, root, subtree, y).empty()) out.push_back(TreeToPathSite{root, subtree, y});
      }
    }
  }
}

void collect_ii(const Graph& g, std::vector<RewriteSpec>& out) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 3) continue;
    for (Vertex first : g.neighbors(u)) {
      if (g.degree(first) != 2) continue;
      std::vector<Vertex> path{u, first};
      Vertex prev = u;
      Vertex cur = first;
      while (g.degree(cur) == 2) {
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (cur == u) break;
        path.push_back(cur);
      }
      if (cur == u || path.back() < u) continue;
      if (check_ii(g, path).empty()) out.push_back(CollapsePathSite{std::move(path)});
    }
  }
}

}  // namespace

std::string_view rewrite_name(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::I: return "I";
    case RewriteKind::II: return "II";
    case RewriteKind::III: return "III";
    case RewriteKind::IV: return "IV";
  }
  return "?";
}

RewriteKind kind_of(const RewriteSpec& spec) {
  return std::visit(
      [](const auto& site) {
        using T = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<T, ShiftPendantsSite>) return RewriteKind::I;
        else if constexpr (std::is_same_v<T, CollapsePathSite>) return RewriteKind::II;
        else if constexpr (std::is_same_v<T, TreeToPathSite>) return RewriteKind::III;
        else return RewriteKind::IV;
      },
      spec);
}

std::string describe(const RewriteSpec& spec) {
  auto list = [](const std::vector<Vertex>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + vtx(xs[i]);
    return s;
  };
  return std::visit(
      [&](const auto& site) -> std::string {
        using T = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<T, ShiftPendantsSite>) {
          return "I u=" + vtx(site.u) + " v=" + vtx(site.v);
        } else if constexpr (std::is_same_v<T, CollapsePathSite>) {
          return "II path=" + list(site.path);
        } else if constexpr (std::is_same_v<T, TreeToPathSite>) {
          return "III root=" + vtx(site.root) + " subtree=" + list(site.subtree) + " y=" + vtx(site.y);
        } else {
          return "IV u=" + vtx(site.u) + " v=" + vtx(site.v);
        }
      },
      spec);
}

int expected_direction(RewriteKind kind) { return kind == RewriteKind::III ? -1 : 1; }

RewriteResult operation_i(const Graph& g, Vertex u, Vertex v) {
  require(check_i, g, "I", u, v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex other = e.u == u ? e.v : (e.v == u ? e.u : kNoVertex);
    if (other != kNoVertex && other != v) {
      edges.push_back(make_edge(v, other));
    } else {
      edges.push_back(e);
    }
  }
  return finish(g, Graph::from_edges(g.order(), edges), identity_mapping(g.order()));
}

RewriteResult operation_ii(const Graph& g, std::span<const Vertex> path) {
  require(check_ii, g, "II", path);
  const std::size_t n = g.order();
  const Vertex u = path.front();
  const Vertex v = path.back();
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  std::vector<Vertex> mapping(n);
  for (Vertex x = 0; x < n; ++x) mapping[x] = x == drop ? keep : (x > drop ? x - 1 : x);
  const Vertex fresh = static_cast<Vertex>(n - 1);

  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) path_edges.push_back(make_edge(path[i], path[i + 1]));
  std::sort(path_edges.begin(), path_edges.end());

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(path_edges.begin(), path_edges.end(), e)) continue;
    edges.push_back(make_edge(mapping[e.u], mapping[e.v]));
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i) edges.push_back(make_edge(keep, mapping[path[i]]));
  edges.push_back(make_edge(keep, fresh));
  return finish(g, Graph::from_edges(n, edges), std::move(mapping));
}

RewriteResult operation_iii(const Graph& g, Vertex root, std::span<const Vertex> subtree, Vertex y) {
  require(check_iii, g, "III", root, subtree, y);
  const std::size_t n = g.order();
  const auto removed = sorted_copy(subtree);
  Relabeled rest = delete_vertices(g, removed);
  auto& mapping = rest.mapping;
  const Edge cut = make_edge(root, y);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e == cut || mapping[e.u] == kNoVertex || mapping[e.v] == kNoVertex) continue;
    edges.push_back(make_edge(mapping[e.u], mapping[e.v]));
  }
  Vertex prev = mapping[root];
  Vertex next_id = static_cast<Vertex>(n - removed.size());
  for (std::size_t i = 0; i < removed.size(); ++i) {
    edges.push_back(make_edge(prev, next_id));
    prev = next_id++;
  }
  edges.push_back(make_edge(prev, mapping[y]));
  return finish(g, Graph::from_edges(n, edges), std::move(mapping));
}

RewriteResult operation_iv(const Graph& g, Vertex u, Vertex v) {
  require(check_iv, g, "IV", u, v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex other = e.u == v ? e.v : (e.v == v ? e.u : kNoVertex);
    if (other != kNoVertex && is_pendant(g, other)) {
      edges.push_back(make_edge(u, other));
    } else {
      edges.push_back(e);
    }
  }
  return finish(g, Graph::from_edges(g.order(), edges), identity_mapping(g.order()));
}

RewriteResult apply_rewrite(const Graph& g, const RewriteSpec& spec) {
  return std::visit(
      [&](const auto& site) {
        using T = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<T, ShiftPendantsSite>) return operation_i(g, site.u, site.v);
        else if constexpr (std::is_same_v<T, CollapsePathSite>) return operation_ii(g, site.path);
        else if constexpr (std::is_same_v<T, TreeToPathSite>) return operation_iii(g, site.root, site.subtree, site.y);
        else return operation_iv(g, site.u, site.v);
      },
      spec);
}

std::vector<RewriteSpec> find_applicable(const Graph& g, RewriteKind kind) {
  std::vector<RewriteSpec> out;
  const auto n = static_cast<Vertex>(g.order());
  switch (kind) {
    case RewriteKind::I:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u)) {
          if (check_i(g, u, v).empty()) out.push_back(ShiftPendantsSite{u, v});
        }
      }
      break;
    case RewriteKind::II:
      collect_ii(g, out);
      break;
    case RewriteKind::III:
      collect_iii(g, out);
      break;
    case RewriteKind::IV:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u != v && check_iv(g, u, v).empty()) out.push_back(MergePendantsSite{u, v});
        }
      }
      break;
  }
  return out;
}

}  // namespace zagreb
