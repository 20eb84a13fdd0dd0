#include "decycle/product.hpp"

#include <stdexcept>

namespace decycle {

ProductIndex::ProductIndex(int first_order, int second_order) : n1(first_order), n2(second_order) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("product factors must be nonempty");
  if (n1 * n2 > kMaxVertices)
    throw std::length_error("product of orders " + std::to_string(n1) + " and " + std::to_string(n2) +
                            " exceeds " + std::to_string(kMaxVertices) + " vertices");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const ProductIndex idx(g.order(), h.order());
  GraphBuilder b(idx.order());
  for (Vertex x = 0; x < g.order(); ++x)
    for (auto [u, v] : h.edges()) b.add_edge(idx(x, u), idx(x, v));
  for (Vertex y = 0; y < h.order(); ++y)
    for (auto [u, v] : g.edges()) b.add_edge(idx(u, y), idx(v, y));
  return b.build();
}

VertexSet layer_g(const Graph& g, const Graph& h, Vertex fixed_h) {
  const ProductIndex idx(g.order(), h.order());
  if (fixed_h < 0 || fixed_h >= h.order()) throw std::out_of_range("layer_g: second-factor vertex out of range");
  VertexSet s(idx.order());
  for (Vertex v = 0; v < g.order(); ++v) s.insert(idx(v, fixed_h));
  return s;
}

VertexSet layer_h(const Graph& g, const Graph& h, Vertex fixed_g) {
  const ProductIndex idx(g.order(), h.order());
  if (fixed_g < 0 || fixed_g >= g.order()) throw std::out_of_range("layer_h: first-factor vertex out of range");
  VertexSet s(idx.order());
  for (Vertex u = 0; u < h.order(); ++u) s.insert(idx(fixed_g, u));
  return s;
}

VertexSet cross_witness(const Graph& t1, const Graph& t2, Vertex i, Vertex j, Vertex k, Vertex l) {
  if (!is_tree(t1) || !is_tree(t2)) throw std::invalid_argument("cross_witness: factors must be trees");
  if (i == j || k == l) throw std::invalid_argument("cross_witness: layer indices must be distinct");
  return layer_h(t1, t2, i) | layer_h(t1, t2, j) | layer_g(t1, t2, k) | layer_g(t1, t2, l);
}

}  // namespace decycle
