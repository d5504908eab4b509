#include <doctest.h>

#include <sstream>

#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph6.hpp"

using namespace zagreb;

// Reference strings were produced by networkx.to_graph6_bytes (header off).
TEST_CASE("graph6 matches reference encodings") {
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(make_graph(1, {})) == "@");
  CHECK(graph6_encode(path_graph(5)) == "DhC");
  CHECK(graph6_encode(cycle_graph(6)) == "EhEG");

  std::vector<Edge> petersen;
  for (Vertex i = 0; i < 5; ++i) {
    petersen.push_back(make_edge(i, (i + 1) % 5));
    petersen.push_back(make_edge(i, i + 5));
    petersen.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  CHECK(graph6_encode(make_graph(10, petersen)) == "IheA@GUAo");
}

TEST_CASE("graph6 long size prefix") {
  const Graph star = star_graph(70);
  const std::string text = graph6_encode(star);
  CHECK(text.size() == 407);
  CHECK(text.substr(0, 12) == "~?@EsaCCA?_C");
  CHECK(graph6_decode(text) == star);
}

TEST_CASE("graph6 decode rejects malformed lines with a position") {
  auto position_of = [](std::string_view line) -> std::size_t {
    try {
      graph6_decode(line);
    } catch (const Graph6Error& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("C!") == 1);         // byte below 63
  CHECK(position_of("C\x7f") == 1);      // byte above 126
  CHECK(position_of("C~~") == 2);        // trailing garbage
  CHECK(position_of("C") == 1);          // missing adjacency
  CHECK(position_of("BC") == 1);         // padding bit set beyond the triangle
  CHECK(position_of("") == 0);
  CHECK_THROWS_AS(graph6_decode("?"), Graph6Error);  // zero vertices
  CHECK(graph6_decode("C~\n") == complete_graph(4));
}

TEST_CASE("graph6 round trip on every connected graph up to 6 vertices") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = n - 1; m <= n * (n - 1) / 2; ++m) {
      EnumSpec spec;
      spec.n = n;
      spec.cyclomatic = m + 1 - n;
      for_each_connected(spec, [&](const EdgeSubset& s) {
        const Graph g = s.to_graph();
        const std::string text = graph6_encode(g);
        CHECK(graph6_decode(text) == g);
        CHECK(graph6_encode(graph6_decode(text)) == text);
        ++checked;
      });
    }
  }
  CHECK(checked == 1 + 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("graph6 stream reader reports line numbers") {
  std::istringstream good("C~\n\nBw\n");
  const auto records = read_graph6_stream(good);
  REQUIRE(records.size() == 2);
  CHECK(records[1].line_number == 3);
  CHECK(records[1].graph == cycle_graph(3));

  std::istringstream bad("C~\nC!\n");
  CHECK_THROWS_WITH(read_graph6_stream(bad), doctest::Contains("line 2"));
}
