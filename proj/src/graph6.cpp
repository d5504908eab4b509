#include "zagreb/graph6.hpp"

#include <stdexcept>

namespace zagreb {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kSmallLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

std::size_t triangle_bits(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumLimit) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    throw GraphError("graph6 encoding supports at most " + std::to_string(kMediumLimit) + " vertices");
  }

  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("byte " + std::to_string(static_cast<int>(c)) + " outside 63..126", i);
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(line[0] - kBias);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') {
      throw Graph6Error("graphs with more than " + std::to_string(kMediumLimit) + " vertices are not supported", 1);
    }
    if (line.size() < 4) throw Graph6Error("truncated size prefix", line.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(line[i] - kBias);
    if (n <= kSmallLimit) throw Graph6Error("non-minimal size prefix", 0);
    pos = 4;
  }
  if (n == 0) throw Graph6Error("graph has no vertices", 0);

  const std::size_t bits = triangle_bits(n);
  const std::size_t expected_bytes = (bits + 5) / 6;
  const std::size_t body = line.size() - pos;
  if (body < expected_bytes) throw Graph6Error("truncated adjacency data", line.size());
  if (body > expected_bytes) throw Graph6Error("trailing data after adjacency", pos + expected_bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // padding bits must be zero
  for (; k < expected_bytes * 6; ++k) {
    const int byte = line[pos + k / 6] - kBias;
    if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("bit set beyond the adjacency triangle", pos + k / 6);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = graph6_decode(line);
      out.push_back({number, line, std::move(g)});
    } catch (const Graph6Error& e) {
      throw std::runtime_error("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace zagreb
