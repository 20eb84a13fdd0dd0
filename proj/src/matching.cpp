#include "decycle/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace decycle {

namespace {

void require_tree(const Graph& t, const char* op) {
  if (!is_tree(t)) throw std::invalid_argument(std::string(op) + ": input is not a tree");
}

/// BFS order from vertex 0 plus parent links.
std::pair<std::vector<Vertex>, std::vector<Vertex>> bfs_order(const Graph& t) {
  std::vector<Vertex> order{0}, parent(t.order(), -1);
  Mask seen = bit(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for_each_bit(t.neighbors(v) & ~seen, [&](Vertex c) {
      parent[c] = v;
      seen |= bit(c);
      order.push_back(c);
    });
  }
  return {order, parent};
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  const int n = g.order();
  if (n > kMaxMatchingOrder)
    throw std::length_error("maximum_matching: order " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxMatchingOrder));
  // best[S] = maximum matching size of G[S]; the lowest vertex of S is either
  // left unmatched or matched to one of its neighbours in S.
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> best(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    const Mask set = s;
    const Vertex v = std::countr_zero(set);
    const Mask rest = set & ~bit(v);
    std::uint8_t b = best[rest];
    for_each_bit(g.neighbors(v) & rest, [&](Vertex u) {
      b = std::max<std::uint8_t>(b, best[rest & ~bit(u)] + 1);
    });
    best[s] = b;
  }

  Matching m;
  Mask set = g.all();
  while (set) {
    const Vertex v = std::countr_zero(set);
    const Mask rest = set & ~bit(v);
    Vertex partner = -1;
    if (best[rest] != best[set]) {
      for_each_bit(g.neighbors(v) & rest, [&](Vertex u) {
        if (partner < 0 && best[rest & ~bit(u)] + 1 == best[set]) partner = u;
      });
    }
    if (partner >= 0) {
      m.edges.emplace_back(v, partner);
      set = rest & ~bit(partner);
    } else {
      set = rest;
    }
  }
  m.size = static_cast<int>(m.edges.size());
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching tree_maximum_matching(const Graph& t) {
  require_tree(t, "tree_maximum_matching");
  auto [order, parent] = bfs_order(t);
  Mask matched = 0;
  Matching m;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it, p = parent[v];
    if (p >= 0 && !(matched & (bit(v) | bit(p)))) {
      matched |= bit(v) | bit(p);
      m.edges.emplace_back(std::min(v, p), std::max(v, p));
    }
  }
  m.size = static_cast<int>(m.edges.size());
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

VertexSet tree_vertex_cover(const Graph& t) {
  require_tree(t, "tree_vertex_cover");
  auto [order, parent] = bfs_order(t);
  VertexSet cover(t.order());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it, p = parent[v];
    if (p >= 0 && !cover.contains(v) && !cover.contains(p)) cover.insert(p);
  }
  return cover;
}

bool is_matching(const Graph& g, const EdgeSet& edges) {
  Mask used = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
    if (used & (bit(u) | bit(v))) return false;
    used |= bit(u) | bit(v);
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (auto [u, v] : g.edges())
    if (!cover.contains(u) && !cover.contains(v)) return false;
  return true;
}

}  // namespace decycle
