// decycle: exact decycling numbers, tree enumeration, theorem sweeps and
// constructive certificates for Cartesian products of small graphs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "decycle/cache.hpp"
#include "decycle/constructions.hpp"
#include "decycle/fvs.hpp"
#include "decycle/graph_io.hpp"
#include "decycle/instance.hpp"
#include "decycle/report.hpp"
#include "decycle/sweep.hpp"
#include "decycle/tree_enum.hpp"

using namespace decycle;
using nlohmann::json;

namespace {

/// A graph argument: an existing file is read as an edge list, a string
/// starting with '(' as a tree code, anything else as graph6.
Instance read_graph_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot read " + arg);
    return graph6_instance(read_edge_list(in));
  }
  if (!arg.empty() && arg.front() == '(') {
    const Graph t = tree_from_code(TreeCode{arg});
    return {arg, t};
  }
  return graph6_instance(from_graph6(arg));
}

SolverBudget budget_from(double seconds) {
  SolverBudget b;
  if (seconds > 0) b.time_limit_seconds = seconds;
  return b;
}

void load_cache(Cache& cache, const std::string& path) {
  if (path.empty()) return;
  const auto report = cache.load(path);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  if (report.skipped) std::cerr << "warning: skipped " << report.skipped << " corrupted cache line(s)\n";
}

void save_cache(const Cache& cache, const std::string& path) {
  if (!path.empty()) cache.store(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decycling numbers and theorem sweeps for Cartesian products of trees"};
  app.require_subcommand(1);

  std::string cache_path;
  if (const char* env = std::getenv("DECYCLE_CACHE")) cache_path = env;
  double budget_seconds = 0;
  std::string format = "csv";

  auto* solve = app.add_subcommand("solve", "Exact decycling number of one graph (graph6 string or edge-list file)");
  std::string input;
  solve->add_option("input", input, "graph6 string, tree code, or path to an edge-list file")->required();
  solve->add_option("--budget-seconds", budget_seconds, "Solver time limit");
  solve->add_option("--cache", cache_path, "Cache file (default: $DECYCLE_CACHE)");

  auto* sweep = app.add_subcommand("sweep", "Run a theorem suite and write CSV + JSON reports");
  SweepOptions opts;
  std::string out_prefix;
  sweep->add_option("suite", opts.suite, "Suite name, or 'all'")->required();
  sweep->add_option("--n-max", opts.n_max, "Largest factor order (suite default if omitted)");
  sweep->add_option("--n-star-max", opts.n_star_max, "Largest star order for star-formula");
  sweep->add_option("--budget-seconds", budget_seconds, "Solver time limit per instance");
  sweep->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--cache", cache_path, "Cache file (default: $DECYCLE_CACHE)");
  sweep->add_option("--format", format, "Report echoed to stdout")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_prefix, "Report path prefix (default: report-<suite>)");
  sweep->add_option("--seed", opts.seed, "Seed for the randomized suites");

  auto* enumerate = app.add_subcommand("enumerate", "List trees of order n, one graph6 line per class");
  int enum_n = 0, times = 0;
  enumerate->add_option("n", enum_n, "Tree order (1..12)")->required();
  enumerate->add_option("--format", format, "csv: graph6 lines; json: codes and graph6")
      ->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("--times", times, "Also export each tree times each tree of this order, with sidecars");

  auto* certify = app.add_subcommand("certify", "Emit an explicit decycling certificate");
  std::string construction, tree_arg, g1_arg, g2_arg;
  int n_star = 0;
  certify->add_option("construction", construction, "star-layer | prism | c4-family")
      ->required()
      ->check(CLI::IsMember({"star-layer", "prism", "c4-family"}));
  certify->add_option("--tree", tree_arg, "Tree factor (tree code or graph6)");
  certify->add_option("--star", n_star, "Star order for star-layer");
  certify->add_option("--g1", g1_arg, "First factor for c4-family");
  certify->add_option("--g2", g2_arg, "Second factor for c4-family");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      Cache cache;
      load_cache(cache, cache_path);
      const auto inst = read_graph_argument(input);
      SolveContext ctx(budget_from(budget_seconds), cache_path.empty() ? nullptr : &cache);
      const auto cert = ctx.solve(inst);
      std::cout << certificate_json({{"key", inst.key}, {"graph6", to_graph6(inst.graph)}}, cert).dump(2) << '\n';
      save_cache(cache, cache_path);
      return 0;
    }

    if (sweep->parsed()) {
      Cache cache;
      load_cache(cache, cache_path);
      SolveContext ctx(budget_from(budget_seconds), cache_path.empty() ? nullptr : &cache);
      std::vector<std::string> suites = {opts.suite};
      if (opts.suite == "all") suites = suite_names();
      int status = 0;
      for (const auto& s : suites) {
        auto o = opts;
        o.suite = s;
        auto result = run_sweep(o, ctx);
        const auto prefix = out_prefix.empty() || suites.size() > 1
                                ? (out_prefix.empty() ? "report-" + s : out_prefix + "-" + s)
                                : out_prefix;
        write_reports(result, prefix);
        if (format == "json")
          std::cout << render_json(result.records, result.meta).dump(2) << '\n';
        else
          std::cout << render_csv(result.records);
        const auto sum = summarize(result.records);
        std::cerr << s << ": " << sum.pass << " pass, " << sum.fail << " fail, " << sum.report_only
                  << " report-only, " << result.errors.size() << " aborted; reports at " << prefix << ".{csv,json}\n";
        for (const auto& e : result.errors) std::cerr << "error: " << e << '\n';
        if (sum.findings)
          std::cerr << "**************************************************\n"
                    << "FINDING: " << sum.findings << " report-only instance(s) violate the scanned inequality\n"
                    << "**************************************************\n";
        status = std::max(status, exit_status(result));
      }
      std::cerr << "solver calls " << ctx.solver_calls() << ", cache hits " << ctx.cache_hits() << '\n';
      save_cache(cache, cache_path);
      return status;
    }

    if (enumerate->parsed()) {
      const auto codes = enumerate_tree_codes(enum_n);
      if (times > 0) {
        json out = json::array();
        for (const auto& c : codes)
          for (const auto& t2 : enumerate_tree_codes(times)) {
            const Instance a{c.bytes, tree_from_code(c)}, b{t2.bytes, tree_from_code(t2)};
            out.push_back(product_sidecar(a, b));
          }
        std::cout << out.dump(2) << '\n';
      } else if (format == "json") {
        json out = json::array();
        for (const auto& c : codes) out.push_back({{"code", c.bytes}, {"graph6", to_graph6(tree_from_code(c))}});
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& c : codes) std::cout << to_graph6(tree_from_code(c)) << '\n';
      }
      return 0;
    }

    if (certify->parsed()) {
      if (construction == "c4-family") {
        if (g1_arg.empty() || g2_arg.empty()) throw std::invalid_argument("c4-family needs --g1 and --g2");
        const auto a = read_graph_argument(g1_arg), b = read_graph_argument(g2_arg);
        json sets = json::array();
        for (const auto& s : disjoint_c4_family(a.graph, b.graph)) sets.push_back(s.to_vector());
        json out = product_sidecar(a, b);
        out["construction"] = "c4-family";
        out["sets"] = sets;
        std::cout << out.dump(2) << '\n';
        return 0;
      }
      if (tree_arg.empty()) throw std::invalid_argument(construction + " needs --tree");
      const auto t = read_graph_argument(tree_arg);
      if (construction == "star-layer") {
        const auto c = star_layer_set(t.graph, n_star);
        std::cout << construction_json(c, {t.key, graph6_instance(make_star(n_star)).key}).dump(2) << '\n';
      } else {
        const auto c = prism_cover_set(t.graph);
        std::cout << construction_json(c, {t.key, graph6_instance(make_path(2)).key}).dump(2) << '\n';
      }
      return 0;
    }
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
