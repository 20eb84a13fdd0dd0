#include "decycle/fvs.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <climits>

namespace decycle {

std::string to_string(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::branch_reduce: return "branch_reduce";
    case Method::construction: return "construction";
  }
  return "unknown";
}

std::string to_string(Optimality o) {
  switch (o) {
    case Optimality::proven: return "proven";
    case Optimality::cross_checked: return "cross_checked";
    case Optimality::upper_bound: return "upper_bound";
  }
  return "unknown";
}

bool certificate_is_valid(const Graph& g, const DecyclingCertificate& c) {
  return c.set.universe() == g.order() && c.set.size() == c.value && is_forest(g, g.all() & ~c.set.bits());
}

void assert_certificate(const Graph& g, const DecyclingCertificate& c) {
  if (!certificate_is_valid(g, c))
    throw std::logic_error("invalid decycling certificate (" + to_string(c.method) + ", value " +
                           std::to_string(c.value) + ")");
}

DecyclingCertificate decycling_oracle(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order)
    throw std::length_error("decycling_oracle: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_order));
  const auto start = std::chrono::steady_clock::now();
  DecyclingCertificate c;
  c.method = Method::oracle;
  c.optimality = Optimality::proven;
  std::vector<int> pick;
  for (int k = 0; k <= n; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ++c.nodes;
      Mask s = 0;
      for (int v : pick) s |= bit(v);
      if (is_forest(g, g.all() & ~s)) {
        c.set = VertexSet(n, s);
        c.value = k;
        c.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        assert_certificate(g, c);
        return c;
      }
      // Next k-combination of 0..n-1 in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("decycling_oracle: no decycling set found");
}

namespace {

/// Multigraph used during the search. Edge multiplicities are capped at two,
/// which leaves the decycling number unchanged. `keep` vertices are barred
/// from the solution; adjacent ones are contracted, so `keep` stays independent.
struct State {
  Mask alive = 0;
  Mask keep = 0;
  Mask loops = 0;
  std::array<Mask, kMaxVertices> adj{};
  std::array<Mask, kMaxVertices> dbl{};

  explicit State(const Graph& g) {
    alive = g.all();
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  }

  int degree(Vertex v) const {
    return std::popcount(adj[v]) + std::popcount(dbl[v]) + ((loops >> v) & 1 ? 2 : 0);
  }

  void remove(Vertex v) {
    for_each_bit(adj[v], [&](Vertex u) {
      adj[u] &= ~bit(v);
      dbl[u] &= ~bit(v);
    });
    adj[v] = dbl[v] = 0;
    alive &= ~bit(v);
    keep &= ~bit(v);
    loops &= ~bit(v);
  }

  void add_edge(Vertex a, Vertex b) {
    if (a == b) {
      loops |= bit(a);
    } else if (adj[a] & bit(b)) {
      dbl[a] |= bit(b);
      dbl[b] |= bit(a);
    } else {
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
  }

  /// Contracts keep vertex u into keep vertex w. False if that closes a cycle
  /// among keep vertices.
  bool merge(Vertex u, Vertex w) {
    if (dbl[u] & bit(w)) return false;
    for_each_bit(adj[u] & ~bit(w), [&](Vertex x) {
      add_edge(w, x);
      if (dbl[u] & bit(x)) add_edge(w, x);
    });
    remove(u);
    return true;
  }

  bool mark_keep(Vertex v) {
    if (loops & bit(v)) return false;
    const Mask keep_nbrs = adj[v] & keep;
    if (dbl[v] & keep_nbrs) return false;
    keep |= bit(v);
    bool ok = true;
    for_each_bit(keep_nbrs, [&](Vertex u) { ok = ok && merge(u, v); });
    return ok && !(loops & bit(v));
  }

  /// Vertices reachable from s through alive vertices outside `blocked`.
  Mask reach(Vertex s, Mask blocked) const {
    const Mask within = alive & ~blocked;
    Mask seen = bit(s), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex x) { next |= adj[x]; });
      frontier = next & within & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  bool on_cycle(Vertex v) const {
    if (dbl[v] || (loops & bit(v))) return true;
    Mask pending = adj[v];
    while (pending) {
      const Vertex s = std::countr_zero(pending);
      const Mask comp = reach(s, bit(v));
      if (std::popcount(comp & adj[v]) > 1) return true;
      pending &= ~comp;
    }
    return false;
  }
};

/// Applies the safe reductions until none fires. Vertices forced into the
/// solution are added to `sol` and charged to `k`. Returns false when the
/// state admits no solution within k.
bool reduce(State& s, int& k, Mask& sol) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask pass = s.alive; pass; pass &= pass - 1) {
      const Vertex v = std::countr_zero(pass);
      if (!(s.alive & bit(v))) continue;
      const bool kept = s.keep & bit(v);
      if (s.loops & bit(v)) {
        if (kept) return false;
        sol |= bit(v);
        s.remove(v);
        if (--k < 0) return false;
        changed = true;
        continue;
      }
      // Two edges into the same contracted keep component.
      if (!kept && (s.dbl[v] & s.keep)) {
        sol |= bit(v);
        s.remove(v);
        if (--k < 0) return false;
        changed = true;
        continue;
      }
      const int d = s.degree(v);
      if (d <= 1) {
        s.remove(v);
        changed = true;
        continue;
      }
      if (d == 2) {
        if (s.dbl[v]) {
          // Both edges go to one neighbour a: every cycle through v uses a.
          const Vertex a = std::countr_zero(s.dbl[v]);
          s.remove(v);
          s.loops |= bit(a);
          changed = true;
          continue;
        }
        const Vertex a = std::countr_zero(s.adj[v]);
        const Vertex b = 63 - std::countl_zero(s.adj[v]);
        const bool a_kept = s.keep & bit(a), b_kept = s.keep & bit(b);
        // A deletable v between two keep vertices cannot be swapped out.
        if (!kept && a_kept && b_kept) continue;
        s.remove(v);
        s.add_edge(a, b);
        changed = true;
      }
    }
  }
  return true;
}

/// Per component, the fewest deletions whose degree sum can destroy enough
/// edges to leave a forest: sum of (deg - 1) over deleted vertices must reach
/// m - n + 1 unless the whole component goes.
int degree_lower_bound(const State& s) {
  int total = 0;
  Mask left = s.alive;
  std::array<int, kMaxVertices> gains{};
  while (left) {
    const Mask comp = s.reach(std::countr_zero(left), 0);
    left &= ~comp;
    int twice_m = 0, n = 0, cnt = 0;
    for_each_bit(comp, [&](Vertex v) {
      const int d = s.degree(v);
      twice_m += d;
      ++n;
      if (!(s.keep & bit(v))) gains[cnt++] = d - 1;
    });
    const int need = twice_m / 2 - n + 1;
    if (need <= 0) continue;
    std::sort(gains.begin(), gains.begin() + cnt, std::greater<>());
    int k = 0, acc = 0;
    while (k < cnt && acc < need) acc += gains[k++];
    // Deleting every deletable vertex always works: keep vertices are independent.
    total += acc >= need ? k : cnt;
  }
  return total;
}

/// Greedy packing of cycles that are disjoint on deletable vertices; keep
/// vertices may be shared because they never enter a solution.
int packing_lower_bound(const State& s) {
  Mask avail = s.alive;
  auto deg_in = [&](Vertex v) {
    return std::popcount(s.adj[v] & avail) + std::popcount(s.dbl[v] & avail) + ((s.loops >> v) & 1 ? 2 : 0);
  };
  int count = 0;
  std::array<Vertex, kMaxVertices> parent{};
  std::array<Vertex, kMaxVertices> queue{};
  while (true) {
    // Strip to the 2-core.
    bool stripped = true;
    while (stripped) {
      stripped = false;
      for_each_bit(avail, [&](Vertex v) {
        if (deg_in(v) <= 1) {
          avail &= ~bit(v);
          stripped = true;
        }
      });
    }
    if (!avail) break;

    Mask cycle = 0;
    for_each_bit(avail & s.loops, [&](Vertex v) {
      if (!cycle) cycle = bit(v);
    });
    if (!cycle) {
      for_each_bit(avail, [&](Vertex v) {
        if (!cycle && (s.dbl[v] & avail)) cycle = bit(v) | bit(std::countr_zero(s.dbl[v] & avail));
      });
    }
    if (!cycle) {
      // BFS from a minimum-degree vertex until an edge closes a cycle.
      Vertex root = -1;
      int best = INT_MAX;
      for_each_bit(avail & ~s.keep, [&](Vertex v) {
        if (deg_in(v) < best) best = deg_in(v), root = v;
      });
      if (root < 0) break;
      Mask seen = bit(root);
      parent[root] = -1;
      int head = 0, tail = 0;
      queue[tail++] = root;
      while (head < tail && !cycle) {
        const Vertex x = queue[head++];
        Mask nbrs = s.adj[x] & avail;
        if (parent[x] >= 0) nbrs &= ~bit(parent[x]);
        for (; nbrs && !cycle; nbrs &= nbrs - 1) {
          const Vertex y = std::countr_zero(nbrs);
          if (seen & bit(y)) {
            Mask py = 0;
            for (Vertex b = y; b >= 0; b = parent[b]) py |= bit(b);
            // Walk both branches up to their lowest common ancestor.
            Mask c = 0;
            Vertex a = x;
            while (!(py & bit(a))) c |= bit(a), a = parent[a];
            const Vertex lca = a;
            for (Vertex b = y; b != lca; b = parent[b]) c |= bit(b);
            cycle = c | bit(lca);
          } else {
            seen |= bit(y);
            parent[y] = x;
            queue[tail++] = y;
          }
        }
      }
      if (!cycle) break;
    }
    ++count;
    const Mask removed = cycle & ~s.keep;
    if (!removed) break;
    avail &= ~removed;
  }
  return count;
}

int lower_bound(const State& s) { return std::max(degree_lower_bound(s), packing_lower_bound(s)); }

class Search {
 public:
  explicit Search(const SolverBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  struct OutOfBudget {};

  /// Finds a solution of size at most k, or proves none exists.
  bool decide(State s, int k, Mask sol, Mask& out) {
    if (++nodes_ > budget_.node_limit) throw OutOfBudget{};
    if ((nodes_ & 1023) == 0 && elapsed() > budget_.time_limit_seconds) throw OutOfBudget{};

    Vertex v = -1;
    while (true) {
      if (!reduce(s, k, sol)) return false;
      if (!s.alive) {
        out = sol;
        return true;
      }
      if (k == 0 || lower_bound(s) > k) return false;
      v = choose(s);
      if (v >= 0) break;
    }

    State without = s;
    without.remove(v);
    if (k >= 1 && decide(without, k - 1, sol | bit(v), out)) return true;
    if (!s.mark_keep(v)) return false;
    return decide(std::move(s), k, sol, out);
  }

 private:
  /// Branch vertex: an endpoint of a parallel pair of deletable vertices if
  /// one exists, else the highest-degree deletable vertex on a cycle. A
  /// candidate on no cycle is never needed, so it is made undeletable and -1
  /// is returned to rerun the reductions.
  static Vertex choose(State& s) {
    const Mask free = s.alive & ~s.keep;
    for (Mask m = free; m; m &= m - 1) {
      const Vertex u = std::countr_zero(m);
      const Mask partners = s.dbl[u] & free;
      if (partners) {
        const Vertex w = std::countr_zero(partners);
        return s.degree(w) > s.degree(u) ? w : u;
      }
    }
    std::array<Vertex, kMaxVertices> order{};
    int cnt = 0;
    for_each_bit(free, [&](Vertex v) { order[cnt++] = v; });
    std::stable_sort(order.begin(), order.begin() + cnt,
                     [&](Vertex a, Vertex b) { return s.degree(a) > s.degree(b); });
    const Vertex v = order[0];
    if (s.on_cycle(v) || !s.mark_keep(v)) return v;
    return -1;
  }

  SolverBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

/// Reduce, then delete a maximum-degree vertex, until nothing is left; then
/// drop members whose return keeps the complement acyclic.
Mask greedy_solution(const Graph& g) {
  State s(g);
  Mask sol = 0;
  int k = INT_MAX / 2;
  while (true) {
    reduce(s, k, sol);
    if (!s.alive) break;
    Vertex best = -1;
    for_each_bit(s.alive, [&](Vertex v) {
      if (best < 0 || s.degree(v) > s.degree(best)) best = v;
    });
    sol |= bit(best);
    s.remove(best);
  }
  for_each_bit(sol, [&](Vertex v) {
    if (is_forest(g, g.all() & ~(sol & ~bit(v)))) sol &= ~bit(v);
  });
  return sol;
}

int verified_hint(const Graph& g, const SolveHints& hints) {
  Mask used = 0;
  for (Mask m : hints.disjoint_cyclic_sets) {
    if ((m & used) || (m & ~g.all()) || is_forest(g, m)) return 0;
    used |= m;
  }
  return static_cast<int>(hints.disjoint_cyclic_sets.size());
}

}  // namespace

DecyclingCertificate decycling_number(const Graph& g, const SolverBudget& budget, const SolveHints& hints) {
  if (budget.node_limit == 0 || !(budget.time_limit_seconds > 0))
    throw std::invalid_argument("solver budget limits must be positive");
  Search search(budget);
  const State root(g);
  const Mask incumbent = greedy_solution(g);
  const int ub = std::popcount(incumbent);
  int lb = std::max(lower_bound(root), verified_hint(g, hints));

  DecyclingCertificate c;
  c.method = Method::branch_reduce;
  c.optimality = Optimality::proven;
  c.set = VertexSet(g.order(), incumbent);
  c.value = ub;

  try {
    for (int k = lb; k < ub; ++k) {
      lb = k;
      Mask found = 0;
      if (search.decide(root, k, 0, found)) {
        c.set = VertexSet(g.order(), found);
        c.value = std::popcount(found);
        break;
      }
    }
  } catch (const Search::OutOfBudget&) {
    throw BudgetExhausted("solver budget exhausted after " + std::to_string(search.nodes()) + " nodes; best " +
                              std::to_string(ub) + ", lower bound " + std::to_string(lb),
                          VertexSet(g.order(), incumbent), lb, search.nodes());
  }
  c.nodes = search.nodes();
  c.wall_seconds = search.elapsed();
  assert_certificate(g, c);
  return c;
}

int forest_number(const Graph& g, const SolverBudget& budget) {
  return g.order() - decycling_number(g, budget).value;
}

int cycle_packing_lower_bound(const Graph& g) { return packing_lower_bound(State(g)); }

}  // namespace decycle
