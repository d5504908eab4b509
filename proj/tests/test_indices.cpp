#include <doctest.h>

#include "oracles.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/random.hpp"

using namespace zagreb;

TEST_CASE("first Zagreb index") {
  CHECK(m1(complete_graph(4)).value == 36);
  CHECK(m1(star_graph(4)).value == 12);
  for (std::size_t n = 3; n < 20; ++n) CHECK(m1(cycle_graph(n)).value == static_cast<std::int64_t>(4 * n));
}

TEST_CASE("second Zagreb index") {
  CHECK(m2(complete_graph(4)).value == 54);
  for (std::size_t n = 2; n < 20; ++n) {
    CHECK(m2(star_graph(n)).value == static_cast<std::int64_t>((n - 1) * (n - 1)));
  }
  CHECK(m2(path_graph(3)).value == 4);
}

TEST_CASE("reformulated first Zagreb index") {
  for (std::size_t n = 3; n < 20; ++n) CHECK(em1(cycle_graph(n)).value == static_cast<std::int64_t>(4 * n));
  CHECK(em1(complete_graph(4)).value == 96);
  CHECK(em1(path_graph(2)).value == 0);
  CHECK(em1(complete_graph(4)) == IndexValue{IndexId::EM1, 96});
}

TEST_CASE("reformulated second Zagreb index counts unordered pairs") {
  CHECK(em2(path_graph(3)).value == 1);
  CHECK(em2(cycle_graph(3)).value == 12);
  CHECK(em2(complete_graph(4)).value == 192);
}

TEST_CASE("index names parse both ways") {
  for (IndexId id : kAllIndices) CHECK(parse_index(index_name(id)) == id);
  CHECK(parse_index("em1") == IndexId::EM1);
  CHECK_FALSE(parse_index("wiener").has_value());
}

TEST_CASE("indices agree with direct evaluation, the line graph and the degree-table kernel") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng.between(2, 16);
    const std::size_t c = rng.between(0, std::min<std::size_t>(8, (n - 1) * (n - 2) / 2));
    const Graph g = random_connected_graph(n, c, rng);
    const auto pairs = oracle::pairs_of(g);
    const int order = static_cast<int>(n);

    CHECK(m1(g).value == oracle::m1(order, pairs));
    CHECK(m2(g).value == oracle::m2(order, pairs));
    CHECK(em1(g).value == oracle::em1(order, pairs));
    CHECK(em2(g).value == oracle::em2(order, pairs));

    const Graph lg = line_graph(g);
    CHECK(em1(g).value == m1(lg).value);
    CHECK(em2(g).value == m2(lg).value);

    // expanded square: sum (d(u)+d(v))^2 - 4 sum (d(u)+d(v)) + 4m, with sum (d(u)+d(v)) = M1
    std::int64_t squares = 0;
    std::int64_t sums = 0;
    for (const Edge& e : g.edges()) {
      const auto s = static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v));
      squares += s * s;
      sums += s;
    }
    CHECK(sums == m1(g).value);
    CHECK(em1(g).value == squares - 4 * sums + 4 * static_cast<std::int64_t>(g.size()));

    const auto deg = g.degrees();
    const auto edges = g.edges();
    for (IndexId id : kAllIndices) {
      CHECK(index_from_degrees<std::size_t>(id, deg, edges) == compute_index(id, g).value);
    }

    for (int k = 0; k < 5; ++k) {
      const Graph h = permute(g, rng.permutation(n));
      for (IndexId id : kAllIndices) CHECK(compute_index(id, h) == compute_index(id, g));
    }
  }
}

TEST_CASE("indices are invariant under 100 relabelings of fixed graphs") {
  Rng rng(23);
  for (const Graph& g : {s_n_k4(9), s_n_m(8, 10), path_graph(7), complete_graph(6)}) {
    for (int k = 0; k < 100; ++k) {
      const Graph h = permute(g, rng.permutation(g.order()));
      for (IndexId id : kAllIndices) CHECK(compute_index(id, h) == compute_index(id, g));
    }
  }
}

TEST_CASE("EM1 is zero exactly when every edge has edge degree zero") {
  CHECK(em1(make_graph(4, {{0, 1}, {2, 3}})).value == 0);
  CHECK(em1(make_graph(3, {})).value == 0);
  CHECK(em1(path_graph(3)).value > 0);
}
