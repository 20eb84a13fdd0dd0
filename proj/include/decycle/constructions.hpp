#pragma once

#include <string>
#include <vector>

#include "decycle/fvs.hpp"
#include "decycle/graph.hpp"

namespace decycle {

/// An explicit decycling set on a product graph built here.
struct Construction {
  std::string tag;
  Graph graph;
  DecyclingCertificate certificate;
};

/// On T □ S_{n_star}: every vertex of T except vertex 0, taken in the layer of
/// the star's center. Size |V(T)| - 1, complement a tree; marked optimal when
/// n_star >= |V(T)|.
Construction star_layer_set(const Graph& t, int n_star);

/// On T □ P_2: a minimum vertex cover of T, taken in the layer of the first
/// P_2 vertex. Size α'(T), complement a tree, always optimal.
Construction prism_cover_set(const Graph& t);

/// α'(G1)·α'(G2) disjoint 4-sets of G1 □ G2, one per pair of edges from
/// maximum matchings of the factors; each induces a C_4.
std::vector<VertexSet> disjoint_c4_family(const Graph& g1, const Graph& g2);

}  // namespace decycle
