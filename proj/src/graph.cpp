#include "decycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace decycle {

namespace {

void check_universe(int universe) {
  if (universe < 0 || universe > kMaxVertices)
    throw std::length_error("vertex universe " + std::to_string(universe) + " exceeds " +
                            std::to_string(kMaxVertices));
}

void check_member(int universe, Vertex v) {
  if (v < 0 || v >= universe)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe));
}

}  // namespace

VertexSet::VertexSet(int universe, Mask bits) : universe_(universe), bits_(bits) {
  check_universe(universe);
  if (bits & ~low_mask(universe))
    throw std::out_of_range("vertex set has members outside universe of size " +
                            std::to_string(universe));
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members) : universe_(universe) {
  check_universe(universe);
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  check_member(universe_, v);
  bits_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  check_member(universe_, v);
  bits_ &= ~bit(v);
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different graphs");
  return VertexSet(universe_, bits_ | o.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different graphs");
  return VertexSet(universe_, bits_ & o.bits_);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each_bit(bits_, [&](Vertex v) { out.push_back(v); });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for_each_bit(adj_[u] & ~low_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

GraphBuilder::GraphBuilder(int n) {
  check_universe(n);
  g_.adj_.assign(n, 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = g_.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} outside graph of order " + std::to_string(n));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!(g_.adj_[u] & bit(v))) {
    g_.adj_[u] |= bit(v);
    g_.adj_[v] |= bit(u);
    ++g_.edges_;
  }
  return *this;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, n - 1);
  return b.build();
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph make_complete(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out.build();
}

Mask reachable(const Graph& g, Vertex start, Mask within) {
  Mask seen = bit(start) & within;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_forest(const Graph& g, Mask within) {
  within &= g.all();
  // A component is a tree iff its induced edge count is its order minus one.
  Mask left = within;
  while (left) {
    const Vertex s = std::countr_zero(left);
    const Mask comp = reachable(g, s, within);
    left &= ~comp;
    int twice_edges = 0;
    for_each_bit(comp, [&](Vertex v) { twice_edges += std::popcount(g.neighbors(v) & comp); });
    if (twice_edges / 2 != std::popcount(comp) - 1) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.all()) == g.all();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep, bool allow_empty) {
  if (keep.universe() != g.order())
    throw std::invalid_argument("vertex set belongs to a graph of order " +
                                std::to_string(keep.universe()));
  InducedSubgraph out;
  out.original_vertex = keep.to_vector();
  if (out.original_vertex.empty()) {
    if (!allow_empty) throw std::invalid_argument("induced subgraph on the empty set");
    out.empty = true;
    return out;
  }
  std::vector<Vertex> relabel(g.order(), -1);
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i)
    relabel[out.original_vertex[i]] = static_cast<Vertex>(i);
  GraphBuilder b(static_cast<int>(out.original_vertex.size()));
  for (auto [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) b.add_edge(relabel[u], relabel[v]);
  out.graph = b.build();
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  Mask left = g.all();
  while (left) {
    const Mask comp = reachable(g, std::countr_zero(left), g.all());
    out.emplace_back(g.order(), comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace decycle
