#pragma once

#include <string>

#include "decycle/graph.hpp"

namespace decycle {

/// Row-major coordinates of a Cartesian product: (g, h) -> g * n2 + h.
struct ProductIndex {
  int n1 = 0;
  int n2 = 0;

  ProductIndex(int first_order, int second_order);

  Vertex operator()(Vertex g, Vertex h) const { return g * n2 + h; }
  Vertex first(Vertex p) const { return p / n2; }
  Vertex second(Vertex p) const { return p % n2; }
  int order() const { return n1 * n2; }
};

/// G □ H. Throws std::length_error when |V(G)|·|V(H)| > 64.
Graph cartesian_product(const Graph& g, const Graph& h);

/// The G-layer G^h: {(v, fixed_h) : v in V(G)}.
VertexSet layer_g(const Graph& g, const Graph& h, Vertex fixed_h);
/// The H-layer ^gH: {(fixed_g, u) : u in V(H)}.
VertexSet layer_h(const Graph& g, const Graph& h, Vertex fixed_g);

/// Union of the H-layers at first-factor vertices i, j and the G-layers at
/// second-factor vertices k, l. For trees with at least two vertices each,
/// this set induces a connected subgraph of order 2n + 2n' - 4 with at least
/// as many edges as vertices.
VertexSet cross_witness(const Graph& t1, const Graph& t2, Vertex i, Vertex j, Vertex k, Vertex l);

}  // namespace decycle
