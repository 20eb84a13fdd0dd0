#include "decycle/constructions.hpp"

#include <stdexcept>

#include "decycle/matching.hpp"
#include "decycle/product.hpp"

namespace decycle {

namespace {

void require_tree(const Graph& t, const char* op) {
  if (!is_tree(t)) throw std::invalid_argument(std::string(op) + ": factor is not a tree");
}

/// Certificate checks shared by the tree constructions: the complement must
/// be a tree, not merely a forest.
void check_tree_complement(const Construction& c) {
  assert_certificate(c.graph, c.certificate);
  const auto rest = induced_subgraph(c.graph, c.certificate.set.complement());
  if (!is_tree(rest.graph)) throw std::logic_error(c.tag + ": complement is not a tree");
}

}  // namespace

Construction star_layer_set(const Graph& t, int n_star) {
  require_tree(t, "star_layer_set");
  if (t.order() < 2) throw std::invalid_argument("star_layer_set: tree needs at least two vertices");
  if (n_star < 2) throw std::invalid_argument("star_layer_set: star needs at least two vertices");
  const ProductIndex idx(t.order(), n_star);
  Construction c{"star-layer", cartesian_product(t, make_star(n_star)), {}};
  const Vertex center = n_star - 1;
  VertexSet set(idx.order());
  for (Vertex v = 1; v < t.order(); ++v) set.insert(idx(v, center));
  c.certificate.set = set;
  c.certificate.value = set.size();
  c.certificate.method = Method::construction;
  c.certificate.optimality = n_star >= t.order() ? Optimality::proven : Optimality::upper_bound;
  check_tree_complement(c);
  return c;
}

Construction prism_cover_set(const Graph& t) {
  require_tree(t, "prism_cover_set");
  const ProductIndex idx(t.order(), 2);
  Construction c{"prism-cover", cartesian_product(t, make_path(2)), {}};
  VertexSet set(idx.order());
  for (Vertex w : tree_vertex_cover(t).to_vector()) set.insert(idx(w, 0));
  c.certificate.set = set;
  c.certificate.value = set.size();
  c.certificate.method = Method::construction;
  c.certificate.optimality = Optimality::proven;
  check_tree_complement(c);
  return c;
}

std::vector<VertexSet> disjoint_c4_family(const Graph& g1, const Graph& g2) {
  const ProductIndex idx(g1.order(), g2.order());
  std::vector<VertexSet> out;
  for (auto [a, b] : maximum_matching(g1).edges)
    for (auto [c, d] : maximum_matching(g2).edges)
      out.emplace_back(idx.order(), std::vector<Vertex>{idx(a, c), idx(a, d), idx(b, c), idx(b, d)});
  return out;
}

}  // namespace decycle
