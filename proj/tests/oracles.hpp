#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Graph type.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "decycle/graph.hpp"

namespace oracle {

using decycle::Graph;
using decycle::GraphBuilder;
using decycle::Mask;

/// Acyclicity by union-find over the edges inside `within`.
inline bool acyclic(const Graph& g, Mask within) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    if (!((within >> u) & 1) || !((within >> v) & 1)) continue;
    const int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Largest induced forest by scanning all 2^n subsets.
inline int forest_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k > best && acyclic(g, s)) best = k;
  }
  return best;
}

inline int decycling_number(const Graph& g) { return g.order() - oracle::forest_number(g); }

/// Maximum matching by trying every edge subset.
inline int matching_number(const Graph& g) {
  const auto e = g.edges();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << e.size()); ++s) {
    Mask used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!((s >> i) & 1)) continue;
      const Mask m = decycle::bit(e[i].first) | decycle::bit(e[i].second);
      ok = !(used & m);
      used |= m;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

/// Isomorphism by trying every bijection, pruned on degrees.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  const int n = a.order();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Non-isomorphic trees on n vertices: every tree on n-1 vertices plus one
/// leaf in every position, deduplicated by brute-force isomorphism.
inline std::vector<Graph> trees(int n) {
  std::vector<Graph> level = {GraphBuilder(1).build()};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const auto& t : level)
      for (int v = 0; v < t.order(); ++v) {
        GraphBuilder b(k);
        for (auto [x, y] : t.edges()) b.add_edge(x, y);
        b.add_edge(v, k - 1);
        Graph c = b.build();
        if (std::none_of(next.begin(), next.end(), [&](const Graph& o) { return isomorphic(o, c); }))
          next.push_back(c);
      }
    level = std::move(next);
  }
  return level;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Erdős–Rényi graph, not necessarily connected.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

}  // namespace oracle
