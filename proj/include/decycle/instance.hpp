#pragma once

#include <string>
#include <string_view>

#include "decycle/graph.hpp"

namespace decycle {

/// A graph plus the descriptor string it is cached and reported under.
///
/// Descriptors: a tree code "(()())" for a tree (labeled as tree_from_code
/// labels it), "C<n>" for a cycle, "g6:<graph6>" for anything else, and
/// "<a> x <b>" for the Cartesian product of two such factors in row-major
/// order. A descriptor always rebuilds the identical labeled graph.
struct Instance {
  std::string key;
  Graph graph;
};

/// Tree relabeled to its canonical representative, keyed by its code.
Instance tree_instance(const Graph& t);
Instance cycle_instance(int n);
Instance graph6_instance(const Graph& g);
Instance product_instance(const Instance& a, const Instance& b);

/// Rebuilds the graph named by a descriptor; std::invalid_argument if malformed.
Graph graph_from_key(std::string_view key);

}  // namespace decycle
