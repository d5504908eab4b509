#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/random.hpp"

using namespace zagreb;

TEST_CASE("canonical form ignores labeling") {
  const Graph a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Graph b = make_graph(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));
  CHECK(canonical_form(s_n_m(6, 8)) != canonical_form(s_n_k4(6)));
}

TEST_CASE("canonical form respects the order limit") {
  CHECK_NOTHROW(canonical_form(path_graph(10)));
  CHECK_THROWS_AS(canonical_form(path_graph(11)), GraphError);
  CHECK_NOTHROW(canonical_form(path_graph(12), 12));
  CHECK_THROWS_AS(canonical_form(path_graph(5), 17), GraphError);
}

TEST_CASE("canonical graph is isomorphic to its input") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.between(2, 8);
    const std::size_t c = rng.between(0, std::min<std::size_t>(4, (n - 1) * (n - 2) / 2));
    const Graph g = random_connected_graph(n, c, rng);
    const Graph canon = canonical_graph(g);
    CHECK(oracle::isomorphic(static_cast<int>(n), oracle::pairs_of(g), oracle::pairs_of(canon)));
  }
}

TEST_CASE("canonical form is invariant under 100 random relabelings") {
  Rng rng(19);
  const std::vector<Graph> fixtures{complete_graph(4), cycle_graph(7),  s_n_m(7, 9),  s_n_k4(8),
                                    path_graph(9),     star_graph(10), complete_graph(10)};
  std::vector<Graph> all(fixtures);
  for (int i = 0; i < 10; ++i) all.push_back(random_connected_graph(rng.between(5, 10), rng.between(0, 4), rng));
  for (const Graph& g : all) {
    const CanonicalForm base = canonical_form(g);
    for (int k = 0; k < 100; ++k) CHECK(canonical_form(permute(g, rng.permutation(g.order()))) == base);
  }
}

TEST_CASE("canonical classes agree with brute-force isomorphism on n = 5") {
  // every connected labeled graph on 5 vertices: the number of classes must be
  // 21, and two graphs share a form exactly when a permutation maps one onto the other
  std::map<std::string, std::vector<oracle::Pairs>> by_form;
  for (std::size_t m = 4; m <= 10; ++m) {
    EnumSpec spec;
    spec.n = 5;
    spec.cyclomatic = m - 4;
    for_each_connected(spec, [&](const EdgeSubset& s) {
      auto& bucket = by_form[canonical_form(s.to_graph()).bytes];
      if (bucket.size() < 3) bucket.push_back(oracle::pairs_of(s.to_graph()));
    });
  }
  CHECK(by_form.size() == 21);
  std::vector<oracle::Pairs> reps;
  for (const auto& [form, graphs] : by_form) {
    for (const auto& g : graphs) CHECK(oracle::isomorphic(5, graphs.front(), g));
    reps.push_back(graphs.front());
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(5, reps[i], reps[j]));
}
