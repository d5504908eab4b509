#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Malformed graph6 input. position() is the 0-based byte offset of the
/// offending character within the line.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at byte " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// graph6 as written by nauty's showg/geng: N(n) prefix, then the upper
// triangle in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

/// One decoded line of a graph6 stream, with its 1-based line number.
struct Graph6Record {
  std::size_t line_number;
  std::string text;
  Graph graph;
};

/// Reads every non-empty line; throws std::runtime_error prefixed with the
/// line number on the first malformed line.
std::vector<Graph6Record> read_graph6_stream(std::istream& in);

}  // namespace zagreb
