#include "zagreb/families.hpp"

#include <vector>

namespace zagreb {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph path_graph(std::size_t n) {
  need(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
  need(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  need(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  need(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

Graph s_n_m(std::size_t n, std::size_t m) {
  need(n >= 4, "S_n^m needs n >= 4");
  need(m + 1 >= n, "S_n^m needs m >= n-1");
  // leaf 1 plus m-n+1 partner leaves must fit among the n-1 leaves
  need(m + 3 <= 2 * n, "S_n^m needs m <= 2n-3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  const std::size_t extra = m + 1 - n;
  for (Vertex j = 2; j < 2 + extra; ++j) edges.push_back({1, j});
  return Graph::from_edges(n, edges);
}

Graph s_n_k4(std::size_t n) {
  need(n >= 4, "S_n^{K4} needs n >= 4");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (Vertex i = 4; i < n; ++i) edges.push_back({0, i});
  return Graph::from_edges(n, edges);
}

ReferenceInfo reference_info(Reference ref) {
  switch (ref) {
    case Reference::Path: return {"path", "4n-10", false, 3, true};
    case Reference::Star: return {"star", "(n-1)(n-2)^2", false, 2, true};
    case Reference::Cycle: return {"cycle", "4n", false, 3, true};
    case Reference::UnicyclicMax: return {"snn", "n^3-5n^2+12n-6", false, 4, true};
    case Reference::BicyclicMax: return {"snn1", "n^3-5n^2+16n+4", true, 4, true};
    case Reference::TricyclicMax: return {"snn2", "n^3-5n^2+20n+32", true, 5, true};
    case Reference::SnK4: return {"snk4", "n^3-5n^2+20n+32", true, 4, true};
    case Reference::Gamma1: return {"gamma1", "n^3-5n^2+16n+18", true, 4, false};
    case Reference::Gamma2: return {"gamma2", "n^3-5n^2+20n-10", true, 4, false};
    case Reference::Gamma3: return {"gamma3", "n^3-5n^2+20n+2", true, 4, false};
    case Reference::Gamma4: return {"gamma4", "n^3-9n^2+32n+60", true, 4, false};
    case Reference::BicyclicMin: return {"bicyclic-min", "4n+34", true, 4, false};
    case Reference::TricyclicMin: return {"tricyclic-min", "4n+68", true, 4, false};
  }
  throw GraphError("unknown reference");
}

std::optional<Reference> parse_reference(std::string_view name) {
  for (Reference r : kAllReferences) {
    if (reference_info(r).name == name) return r;
  }
  return std::nullopt;
}

std::int64_t expected_em1(Reference ref, std::size_t order) {
  const ReferenceInfo info = reference_info(ref);
  if (order < info.min_order) {
    throw GraphError(std::string(info.name) + " is defined for n >= " + std::to_string(info.min_order));
  }
  const auto n = static_cast<std::int64_t>(order);
  const std::int64_t n2 = n * n;
  const std::int64_t n3 = n2 * n;
  switch (ref) {
    case Reference::Path: return 4 * n - 10;
    case Reference::Star: return (n - 1) * (n - 2) * (n - 2);
    case Reference::Cycle: return 4 * n;
    case Reference::UnicyclicMax: return n3 - 5 * n2 + 12 * n - 6;
    case Reference::BicyclicMax: return n3 - 5 * n2 + 16 * n + 4;
    case Reference::TricyclicMax:
    case Reference::SnK4: return n3 - 5 * n2 + 20 * n + 32;
    case Reference::Gamma1: return n3 - 5 * n2 + 16 * n + 18;
    case Reference::Gamma2: return n3 - 5 * n2 + 20 * n - 10;
    case Reference::Gamma3: return n3 - 5 * n2 + 20 * n + 2;
    case Reference::Gamma4: return n3 - 9 * n2 + 32 * n + 60;
    case Reference::BicyclicMin: return 4 * n + 34;
    case Reference::TricyclicMin: return 4 * n + 68;
  }
  throw GraphError("unknown reference");
}

Graph construct(Reference ref, std::size_t n) {
  const ReferenceInfo info = reference_info(ref);
  if (!info.has_constructor) throw GraphError(std::string(info.name) + " has no constructor");
  if (n < info.min_order) {
    throw GraphError(std::string(info.name) + " is defined for n >= " + std::to_string(info.min_order));
  }
  switch (ref) {
    case Reference::Path: return path_graph(n);
    case Reference::Star: return star_graph(n);
    case Reference::Cycle: return cycle_graph(n);
    case Reference::UnicyclicMax: return s_n_m(n, n);
    case Reference::BicyclicMax: return s_n_m(n, n + 1);
    case Reference::TricyclicMax: return s_n_m(n, n + 2);
    case Reference::SnK4: return s_n_k4(n);
    default: break;
  }
  throw GraphError("unknown reference");
}

}  // namespace zagreb
