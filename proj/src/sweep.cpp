#include "decycle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "decycle/product.hpp"
#include "decycle/report.hpp"
#include "decycle/tree_enum.hpp"

namespace decycle {

namespace {

using Job = std::function<std::vector<CheckRecord>()>;

template <typename F>
Job single(F f) {
  return [f] { return std::vector<CheckRecord>{f()}; };
}

/// Unordered pairs of tree classes with 2 <= n <= n' <= n_max.
std::vector<std::pair<Graph, Graph>> tree_pairs(int n_max) {
  std::vector<std::pair<Graph, Graph>> out;
  for (int n = 2; n <= n_max; ++n)
    for (int n2 = n; n2 <= n_max; ++n2) {
      const auto a = enumerate_trees(n), b = enumerate_trees(n2);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = n == n2 ? i : 0; j < b.size(); ++j) out.emplace_back(a[i], b[j]);
    }
  return out;
}

/// Every product instance of at most 14 vertices the other suites touch.
std::vector<Instance> small_product_instances(const SweepOptions& o) {
  std::map<std::string, Instance> byKey;
  auto add = [&](Instance i) {
    if (i.graph.order() <= 14) byKey.emplace(i.key, std::move(i));
  };
  for (const auto& [t, t2] : tree_pairs(7))
    if (t.order() * t2.order() <= 14) add(product_instance(tree_instance(t), tree_instance(t2)));
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) {
      add(product_instance(tree_instance(t), tree_instance(make_path(2))));
      for (int ns = 2; n * ns <= 14; ++ns) add(product_instance(tree_instance(t), tree_instance(make_star(ns))));
    }
  for (int n = 3; n * n <= 14; ++n)
    for (int n2 = n; n * n2 <= 14; ++n2) add(product_instance(cycle_instance(n), cycle_instance(n2)));
  for (const auto& [g1, g2] : random_factor_pairs(o.seed, o.random_pairs, o.random_factor_order))
    if (g1.order() * g2.order() <= 14) add(product_instance(graph6_instance(g1), graph6_instance(g2)));
  std::vector<Instance> out;
  for (auto& [k, i] : byKey) out.push_back(std::move(i));
  return out;
}

std::vector<Job> build_jobs(const SweepOptions& o, SolveContext& ctx, int n_max, nlohmann::json& meta) {
  std::vector<Job> jobs;
  const auto& s = o.suite;
  SolveContext* c = &ctx;
  if (s == "thm-main" || s == "equality") {
    for (auto& [t, t2] : tree_pairs(n_max)) {
      if (s == "thm-main")
        jobs.push_back(single([c, t, t2] { return check_main_theorem(*c, t, t2); }));
      else
        jobs.push_back(single([c, t, t2] { return check_equality_characterization(*c, t, t2); }));
    }
  } else if (s == "star-formula") {
    meta["n_star_max"] = o.n_star_max;
    for (int n = 2; n <= n_max; ++n)
      for (const auto& t : enumerate_trees(n))
        for (int ns = n; ns <= o.n_star_max && n * ns <= kMaxVertices; ++ns)
          jobs.push_back(single([c, t, ns] { return check_star_formula(*c, t, ns); }));
  } else if (s == "small-star") {
    for (int n = 4; n <= n_max; ++n)
      for (const auto& t : enumerate_trees(n)) {
        if (is_star(t)) continue;
        for (int ns = 2; ns < n && n * ns <= kMaxVertices; ++ns)
          jobs.push_back(single([c, t, ns] { return check_small_star_range(*c, t, ns); }));
      }
  } else if (s == "prism") {
    for (int n = 1; n <= n_max; ++n)
      for (const auto& t : enumerate_trees(n)) jobs.push_back(single([c, t] { return check_prism(*c, t); }));
  } else if (s == "matching-bound") {
    meta["seed"] = o.seed;
    meta["pairs"] = o.random_pairs;
    meta["max_factor_order"] = o.random_factor_order;
    for (auto& [g1, g2] : random_factor_pairs(o.seed, o.random_pairs, o.random_factor_order))
      jobs.push_back(single([c, g1, g2] { return check_matching_bound(*c, g1, g2); }));
  } else if (s == "torus") {
    for (int n = 3; n <= n_max; ++n)
      for (int n2 = n; n2 <= n_max; ++n2)
        jobs.push_back(single([c, n, n2] { return check_torus_formula(*c, n, n2); }));
  } else if (s == "grid-bounds") {
    std::set<std::pair<int, int>> sizes;
    for (int n = 2; n <= n_max; ++n)
      for (int n2 = n; n2 <= n_max; ++n2) sizes.emplace(n, n2);
    sizes.emplace(2, n_max + 1);
    sizes.emplace(3, n_max + 1);
    for (auto [n, n2] : sizes) jobs.push_back(single([c, n, n2] { return check_grid_bounds(*c, n, n2); }));
  } else if (s == "open-conjecture") {
    jobs.push_back([c, n_max] { return scan_open_conjecture(*c, n_max); });
  } else if (s == "oracle-equivalence") {
    meta["seed"] = o.seed;
    meta["random_graphs"] = o.random_graphs;
    for (auto& inst : small_product_instances(o))
      jobs.push_back(single([c, inst] { return check_oracle_equivalence(*c, inst); }));
    for (const auto& g : random_graphs(o.seed, o.random_graphs, 15, 18)) {
      const auto inst = graph6_instance(g);
      jobs.push_back(single([c, inst] { return check_oracle_equivalence(*c, inst); }));
    }
  } else {
    throw std::invalid_argument("unknown suite \"" + s + "\"");
  }
  return jobs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm-main", "equality",    "star-formula",   "small-star",
                                                 "prism",    "matching-bound", "torus",       "grid-bounds",
                                                 "open-conjecture", "oracle-equivalence"};
  return names;
}

int default_n_max(const std::string& suite) {
  if (suite == "prism") return 10;
  if (suite == "small-star") return 7;
  if (suite == "matching-bound" || suite == "oracle-equivalence") return 7;
  return 5;
}

SweepResult run_sweep(const SweepOptions& o, SolveContext& ctx) {
  const int n_max = o.n_max > 0 ? o.n_max : default_n_max(o.suite);
  SweepResult result;
  result.meta = {{"suite", o.suite},
                 {"n_max", n_max},
                 {"workers", o.workers},
                 {"budget", {{"node_limit", ctx.budget().node_limit},
                             {"time_limit_seconds", ctx.budget().time_limit_seconds}}}};
  auto jobs = build_jobs(o, ctx, n_max, result.meta);

  std::vector<std::vector<CheckRecord>> outputs(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        outputs[i] = jobs[i]();
      } catch (const BudgetExhausted& e) {
        errors[i] = std::string("budget exhausted: ") + e.what();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int threads = std::max(1, o.workers);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& out : outputs)
    for (auto& r : out) result.records.push_back(std::move(r));
  for (auto& e : errors)
    if (!e.empty()) result.errors.push_back(std::move(e));
  std::sort(result.records.begin(), result.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.claim_id, a.instance) < std::tie(b.claim_id, b.instance);
  });
  result.meta["instances"] = result.records.size();
  result.meta["errors"] = result.errors;
  return result;
}

int exit_status(const SweepResult& r) {
  if (!r.errors.empty()) return 2;
  return summarize(r.records).fail > 0 ? 1 : 0;
}

void write_reports(const SweepResult& r, const std::string& prefix) {
  std::ofstream csv(prefix + ".csv");
  if (!csv) throw std::runtime_error("cannot write " + prefix + ".csv");
  csv << render_csv(r.records);
  std::ofstream json(prefix + ".json");
  if (!json) throw std::runtime_error("cannot write " + prefix + ".json");
  json << render_json(r.records, r.meta).dump(2) << '\n';
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random graph order out of range");
  if (n == 1) return GraphBuilder(1).build();
  GraphBuilder b(n);
  Graph tree;
  if (n == 2) {
    tree = make_path(2);
  } else {
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = static_cast<int>(rng() % static_cast<unsigned>(n));
    tree = tree_from_prufer(seq, n);
  }
  for (auto [u, v] : tree.edges()) b.add_edge(u, v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (!tree.adjacent(u, v) && coin < p) b.add_edge(u, v);
    }
  return b.build();
}

std::vector<std::pair<Graph, Graph>> random_factor_pairs(std::uint64_t seed, int count, int max_order) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Graph, Graph>> out;
  for (int i = 0; i < count; ++i) {
    const int n1 = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_order - 1));
    const int n2 = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_order - 1));
    Graph g1 = random_connected_graph(rng, n1, 0.3);
    Graph g2 = random_connected_graph(rng, n2, 0.3);
    out.emplace_back(std::move(g1), std::move(g2));
  }
  return out;
}

std::vector<Graph> random_graphs(std::uint64_t seed, int count, int min_order, int max_order) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = min_order + static_cast<int>(rng() % static_cast<unsigned>(max_order - min_order + 1));
    out.push_back(random_connected_graph(rng, n, 0.12));
  }
  return out;
}

}  // namespace decycle
