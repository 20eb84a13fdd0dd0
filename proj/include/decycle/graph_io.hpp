#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "decycle/graph.hpp"

namespace decycle {

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::invalid_argument("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Header-less graph6: size byte(s), then the upper triangle column by column
/// in groups of six bits, each group offset by 63, zero padded.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge-list text: "n m" followed by m lines "u v", 0-based.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace decycle
