#pragma once

#include <utility>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// Edges (u, v) with u < v, sorted lexicographically.
using EdgeSet = std::vector<std::pair<Vertex, Vertex>>;

struct Matching {
  int size = 0;
  EdgeSet edges;
};

inline constexpr int kMaxMatchingOrder = 22;

/// Maximum matching by dynamic programming over vertex subsets; exact for
/// any graph up to kMaxMatchingOrder vertices (std::length_error beyond).
Matching maximum_matching(const Graph& g);
inline int matching_number(const Graph& g) { return maximum_matching(g).size; }

/// Greedy leaf-first matching on a tree rooted at vertex 0.
Matching tree_maximum_matching(const Graph& t);
inline int tree_matching_number(const Graph& t) { return tree_maximum_matching(t).size; }

/// Minimum vertex cover of a tree: scanning leaves first, an uncovered edge to
/// the parent puts the parent in the cover.
VertexSet tree_vertex_cover(const Graph& t);

bool is_matching(const Graph& g, const EdgeSet& edges);
bool is_vertex_cover(const Graph& g, const VertexSet& cover);

}  // namespace decycle
