#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace decycle {

using Vertex = int;
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline constexpr Mask low_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Calls f(v) for every set bit of m, lowest index first.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// A subset of the vertices 0..universe-1 of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe, Mask bits = 0);
  VertexSet(int universe, const std::vector<Vertex>& members);

  static VertexSet full(int universe) { return VertexSet(universe, low_mask(universe)); }

  int universe() const { return universe_; }
  Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const { return v >= 0 && v < universe_ && (bits_ >> v) & 1; }

  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const { return VertexSet(universe_, ~bits_ & low_mask(universe_)); }
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;

  /// Members in increasing order.
  std::vector<Vertex> to_vector() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  Mask bits_ = 0;
};

/// Undirected simple graph on at most 64 vertices, adjacency stored as one
/// bitset word per vertex. Immutable once built; use GraphBuilder to make one.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }
  Mask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1; }
  Mask all() const { return low_mask(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Mask> adj_;
  int edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  /// Throws std::invalid_argument on a self-loop or an out-of-range endpoint.
  /// Repeated edges are ignored.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() const { return g_; }

 private:
  Graph g_;
};

Graph make_path(int n);
/// Star S_n = K_{1,n-1}; the center is vertex n-1.
Graph make_star(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Acyclicity of the subgraph induced by `within` (all vertices by default).
bool is_forest(const Graph& g, Mask within);
inline bool is_forest(const Graph& g) { return is_forest(g, g.all()); }
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_vertex[i] is the vertex of the source graph relabeled to i.
  std::vector<Vertex> original_vertex;
  bool empty = false;
};

/// G[keep] with vertices relabeled 0..|keep|-1 in increasing original order.
/// An empty `keep` throws std::invalid_argument unless allow_empty is set.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep, bool allow_empty = false);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertices reachable from `start` inside `within`.
Mask reachable(const Graph& g, Vertex start, Mask within);

}  // namespace decycle
