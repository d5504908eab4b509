#include <doctest.h>

#include "oracles.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/random.hpp"

using namespace zagreb;

TEST_CASE("make_graph builds exactly the given edges") {
  const Graph single = make_graph(1, {});
  CHECK(single.order() == 1);
  CHECK(single.size() == 0);

  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.size() == 3);
  CHECK(triangle == cycle_graph(3));

  const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.size() == 6);
  CHECK(k4.edges().size() == 6);
}

TEST_CASE("make_graph rejects bad pairs and names them") {
  CHECK_THROWS_WITH_AS(make_graph(3, {{0, 3}}), doctest::Contains("(0,3)"), GraphError);
  CHECK_THROWS_WITH_AS(make_graph(3, {{1, 1}}), doctest::Contains("loop"), GraphError);
  CHECK_THROWS_WITH_AS(make_graph(3, {{0, 1}, {1, 0}}), doctest::Contains("(0,1)"), GraphError);
  CHECK_THROWS_AS(make_graph(0, {}), GraphError);
}

TEST_CASE("degrees and edge degrees") {
  const Graph k4 = complete_graph(4);
  CHECK(degree(k4, 0) == 3);
  CHECK(degree(star_graph(5), 0) == 4);
  CHECK(degree(path_graph(4), 1) == 2);
  CHECK_THROWS_AS(degree(k4, 4), GraphError);

  CHECK(edge_degree(path_graph(2), {0, 1}) == 0);
  CHECK(edge_degree(cycle_graph(3), {0, 2}) == 2);
  CHECK(edge_degree(k4, {1, 3}) == 4);
  CHECK_THROWS_AS(edge_degree(path_graph(4), {0, 3}), GraphError);
}

TEST_CASE("connectivity and cyclomatic number") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(make_graph(1, {})));

  CHECK(cyclomatic_number(star_graph(6)) == 0);
  CHECK(cyclomatic_number(cycle_graph(7)) == 1);
  CHECK(cyclomatic_number(complete_graph(4)) == 3);
  CHECK_THROWS_AS(cyclomatic_number(make_graph(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("pendant vertices") {
  CHECK(pendant_vertices(star_graph(4)) == std::vector<Vertex>{1, 2, 3});
  CHECK(pendant_vertices(cycle_graph(5)).empty());
  CHECK(pendant_vertices(path_graph(3)) == std::vector<Vertex>{0, 2});
}

TEST_CASE("brace strips pendants to a fixed point") {
  CHECK(brace(cycle_graph(6)) == cycle_graph(6));

  // triangle 0-1-2 with the path 2-3-4 hanging off it
  const Graph tail = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  const Relabeled r = brace_with_mapping(tail);
  CHECK(r.graph == cycle_graph(3));
  CHECK(r.mapping == std::vector<Vertex>{0, 1, 2, kNoVertex, kNoVertex});

  CHECK(brace(s_n_k4(9)) == complete_graph(4));
  CHECK_THROWS_AS(brace(path_graph(5)), GraphError);
}

TEST_CASE("brace keeps the cyclomatic number and leaves minimum degree 2") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.between(4, 14);
    const std::size_t c = rng.between(1, 4);
    if (n - 1 + c > n * (n - 1) / 2) continue;
    const Graph g = random_connected_graph(n, c, rng);
    const Graph b = brace(g);
    CHECK(cyclomatic_number(b) == c);
    for (Vertex v = 0; v < b.order(); ++v) CHECK(b.degree(v) >= 2);
  }
}

TEST_CASE("fuse identifies two vertices") {
  // endpoints of P4 -> triangle
  CHECK(fuse(path_graph(4), 0, 3) == cycle_graph(3));
  CHECK(fuse(make_graph(2, {}), 0, 1) == make_graph(1, {}));

  // two disjoint triangles fused at one vertex each -> bowtie
  const Graph two = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const Relabeled bow = fuse_with_mapping(two, 2, 3);
  CHECK(bow.graph.order() == 5);
  CHECK(bow.graph.size() == 6);
  CHECK(bow.graph.degree(2) == 4);
  CHECK(bow.mapping == std::vector<Vertex>{0, 1, 2, 2, 3, 4});

  CHECK_THROWS_AS(fuse(path_graph(3), 1, 1), GraphError);
  CHECK_THROWS_AS(fuse(path_graph(3), 0, 1), GraphError);
}

TEST_CASE("fuse collapses shared neighbours") {
  // C4 0-1-2-3: fusing 0 and 2 leaves 1 and 3 each with a single edge to the merged vertex
  const Graph g = fuse(cycle_graph(4), 0, 2);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
}

TEST_CASE("line graph") {
  CHECK(line_graph(path_graph(3)) == path_graph(2));
  const Graph lc4 = line_graph(cycle_graph(4));
  CHECK(lc4.order() == 4);
  CHECK(lc4.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(lc4.degree(v) == 2);

  const Graph lk4 = line_graph(complete_graph(4));
  CHECK(lk4.order() == 6);
  CHECK(lk4.size() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(lk4.degree(v) == 4);

  CHECK_THROWS_AS(line_graph(make_graph(3, {})), GraphError);
}

TEST_CASE("degree identities on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.between(2, 15);
    const std::size_t max_c = std::min<std::size_t>(6, (n - 1) * (n - 2) / 2);
    const Graph g = random_connected_graph(n, rng.between(0, max_c), rng);
    const auto deg = g.degrees();

    std::size_t degree_sum = 0;
    std::size_t square_sum = 0;
    std::size_t pair_sum = 0;
    for (auto d : deg) {
      degree_sum += d;
      square_sum += d * d;
      pair_sum += d * (d - 1) / 2;
    }
    CHECK(degree_sum == 2 * g.size());

    std::size_t edge_degree_sum = 0;
    for (const Edge& e : g.edges()) edge_degree_sum += edge_degree(g, e);
    CHECK(edge_degree_sum == square_sum - 2 * g.size());

    const Graph lg = line_graph(g);
    CHECK(lg.order() == g.size());
    CHECK(lg.size() == pair_sum);
    const auto edges = g.edges();
    for (Vertex i = 0; i < edges.size(); ++i) CHECK(edge_degree(g, edges[i]) == lg.degree(i));
  }
}

TEST_CASE("edge list text format") {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(format_edge_list(complete_graph(5))) == complete_graph(5));
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), GraphError);
}
