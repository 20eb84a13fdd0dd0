// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// --stretch runs only the larger main-theorem tier (n' = 6).
// --reports DIR also writes each suite's CSV and JSON report into DIR.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <thread>

#include "decycle/constructions.hpp"
#include "decycle/instance.hpp"
#include "decycle/report.hpp"
#include "decycle/sweep.hpp"
#include "decycle/tree_enum.hpp"

using namespace decycle;

namespace {

// Pinned limits and expected values.
constexpr double kMainTheoremSeconds = 300.0;
constexpr double kPrismSeconds = 600.0;
constexpr std::size_t kMainTheoremPairs = 28;      // classes per order 1,1,2,3 for n = 2..5
constexpr std::size_t kStretchPairs = 28 + 6 * 7 + 21;  // adds n' = 6 (6 classes)
constexpr std::size_t kPrismTrees = 201;           // 1+1+1+2+3+6+11+23+47+106
constexpr std::size_t kPrismTreesAtTen = 106;
constexpr int kMatchingPairs = 100;
constexpr int kMatchingFactorOrder = 7;
constexpr int kRandomOracleGraphs = 50;
const std::map<std::pair<int, int>, long long> kTorus = {
    {{3, 3}, 4}, {{3, 4}, 5}, {{3, 5}, 6}, {{4, 4}, 6}, {{4, 5}, 8}};
const std::vector<std::pair<int, int>> kGridSizes = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5},
                                                     {4, 4}, {4, 5}, {5, 5}, {2, 6}, {3, 6}};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;
std::string report_dir;
int workers = 1;
std::vector<SweepResult> all_results;

void line(int id, const std::string& name, const Outcome& o) {
  std::printf("[%s] criterion %2d  %-28s %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Timed {
  SweepResult result;
  double seconds = 0;
};

Timed sweep(SweepOptions o) {
  o.workers = workers;
  SolveContext ctx;
  const auto start = std::chrono::steady_clock::now();
  Timed t{run_sweep(o, ctx), 0};
  t.seconds = seconds_since(start);
  if (!report_dir.empty()) write_reports(t.result, report_dir + "/" + o.suite);
  all_results.push_back(t.result);
  return t;
}

SweepOptions suite(const std::string& name, int n_max = 0) {
  SweepOptions o;
  o.suite = name;
  o.n_max = n_max;
  return o;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

/// Every record passed, none aborted, and the count is as expected.
Outcome all_pass(const SweepResult& r, std::size_t expected_count) {
  const auto s = summarize(r.records);
  Outcome o;
  o.pass = r.errors.empty() && s.fail == 0 && r.records.size() == expected_count &&
           std::all_of(r.records.begin(), r.records.end(), is_self_consistent);
  o.detail = fmt("%zu/%zu instances pass, %d fail, %zu aborted", static_cast<std::size_t>(s.pass), expected_count,
                 s.fail, r.errors.size());
  return o;
}

long long value_of(const CheckRecord& r, const char* key) {
  auto it = r.computed.find(key);
  return it == r.computed.end() ? -1 : it->second;
}

/// Size the record's certificate must have, from whatever value it reports.
long long certified_value(const CheckRecord& r, int order) {
  if (r.computed.count("decycling")) return r.computed.at("decycling");
  if (r.computed.count("solver")) return r.computed.at("solver");
  if (r.computed.count("f_pair")) return order - r.computed.at("f_pair");
  return -1;
}

void run_stretch() {
  const auto t = sweep(suite("thm-main", 6));
  auto o = all_pass(t.result, kStretchPairs);
  o.detail += fmt(", %.3f s", t.seconds);
  line(1, "main theorem, n' <= 6", o);
}

void run_all() {
  {
    const auto t = sweep(suite("thm-main", 5));
    auto o = all_pass(t.result, kMainTheoremPairs);
    o.pass = o.pass && t.seconds < kMainTheoremSeconds;
    o.detail += fmt(", %.3f s (limit %.0f s)", t.seconds, kMainTheoremSeconds);
    line(1, "main theorem", o);
  }
  {
    const auto t = sweep(suite("equality", 5));
    line(2, "equality characterization", all_pass(t.result, kMainTheoremPairs));
  }
  {
    auto opts = suite("star-formula", 5);
    opts.n_star_max = 8;
    const auto t = sweep(opts);
    std::size_t expected = 0;
    for (int n = 2; n <= 5; ++n) expected += enumerate_trees(n).size() * static_cast<std::size_t>(8 - n + 1);
    auto o = all_pass(t.result, expected);
    int star_pairs = 0;
    for (const auto& r : t.result.records) {
      const auto n = value_of(r, "n");
      const Graph t1 = graph_from_key(r.instance.substr(0, r.instance.find(" x ")));
      if (is_star(t1)) {
        ++star_pairs;
        o.pass = o.pass && value_of(r, "decycling") == n - 1;
      }
      o.pass = o.pass && value_of(r, "forest") == n * value_of(r, "n_star") - n + 1;
    }
    o.detail += fmt(", %d star-star pairs", star_pairs);
    line(3, "star formulas", o);
  }
  {
    const auto t = sweep(suite("prism", 10));
    auto o = all_pass(t.result, kPrismTrees);
    std::size_t at_ten = 0;
    for (const auto& r : t.result.records) {
      if (value_of(r, "n") == 10) ++at_ten;
      o.pass = o.pass && value_of(r, "construction_valid") == 1 &&
               value_of(r, "construction_size") == value_of(r, "decycling");
    }
    o.pass = o.pass && at_ten == kPrismTreesAtTen && enumerate_trees(10).size() == kPrismTreesAtTen &&
             t.seconds < kPrismSeconds;
    o.detail += fmt(", %zu trees at n=10, %.3f s (limit %.0f s)", at_ten, t.seconds, kPrismSeconds);
    line(4, "prism", o);
  }
  {
    const auto t = sweep(suite("torus", 5));
    Outcome o;
    int matched = 0;
    for (const auto& r : t.result.records) {
      const auto key = std::make_pair(static_cast<int>(value_of(r, "n")), static_cast<int>(value_of(r, "n2")));
      if (auto it = kTorus.find(key); it != kTorus.end()) {
        o.pass = o.pass && value_of(r, "decycling") == it->second && r.verdict == Verdict::pass;
        o.detail += fmt("(%d,%d)=%lld ", key.first, key.second, value_of(r, "decycling"));
        ++matched;
      }
    }
    o.pass = o.pass && matched == static_cast<int>(kTorus.size()) && t.result.errors.empty();
    line(5, "torus values", o);
  }
  {
    const auto t = sweep(suite("grid-bounds", 5));
    auto o = all_pass(t.result, kGridSizes.size());
    std::vector<std::pair<int, int>> seen;
    for (const auto& r : t.result.records) {
      const int n = static_cast<int>(value_of(r, "n")), n2 = static_cast<int>(value_of(r, "n2"));
      seen.emplace_back(n, n2);
      if (n == 2 && n2 == 2) o.pass = o.pass && value_of(r, "decycling") == 1;
      if (n == 3 && n2 == 3) o.pass = o.pass && value_of(r, "decycling") == 2;
    }
    std::sort(seen.begin(), seen.end());
    auto want = kGridSizes;
    std::sort(want.begin(), want.end());
    o.pass = o.pass && seen == want;
    line(6, "grid bounds", o);
  }
  {
    auto opts = suite("matching-bound");
    opts.random_pairs = kMatchingPairs;
    opts.random_factor_order = kMatchingFactorOrder;
    const auto t = sweep(opts);
    auto o = all_pass(t.result, kMatchingPairs);
    o.pass = o.pass && t.result.meta.contains("seed") && t.result.meta["seed"] == kDefaultSeed;
    o.detail += fmt(", seed %llu", static_cast<unsigned long long>(kDefaultSeed));
    line(7, "matching bound", o);
  }
  {
    auto opts = suite("oracle-equivalence");
    opts.random_graphs = kRandomOracleGraphs;
    const auto t = sweep(opts);
    std::size_t small = 0, large = 0;
    for (const auto& r : t.result.records) (value_of(r, "order") <= 14 ? small : large)++;
    auto o = all_pass(t.result, t.result.records.size());
    o.pass = o.pass && large == static_cast<std::size_t>(kRandomOracleGraphs) && small > 0;
    o.detail += fmt(" (%zu products <= 14 vertices, %zu random 15-18)", small, large);
    line(8, "oracle equivalence", o);
  }
  {
    const auto t = sweep(suite("open-conjecture", 5));
    // Criterion 9 also audits these certificates, so the scan runs first.
    Outcome o;
    std::size_t checked = 0, bad = 0;
    for (const auto& res : all_results)
      for (const auto& r : res.records) {
        const Graph g = graph_from_key(r.instance);
        const long long v = certified_value(r, g.order());
        DecyclingCertificate c;
        c.set = VertexSet(g.order(), r.certificate);
        c.value = static_cast<int>(v);
        ++checked;
        if (v < 0 || !certificate_is_valid(g, c)) ++bad;
      }
    std::size_t constructions = 0;
    for (int n = 1; n <= 10; ++n)
      for (const auto& tree : enumerate_trees(n)) {
        const auto p = prism_cover_set(tree);
        ++constructions;
        if (!certificate_is_valid(p.graph, p.certificate)) ++bad;
        for (int ns = 2; n >= 2 && ns <= 8 && n * ns <= kMaxVertices; ++ns) {
          const auto s = star_layer_set(tree, ns);
          ++constructions;
          if (!certificate_is_valid(s.graph, s.certificate) || s.certificate.value != n - 1) ++bad;
        }
      }
    o.pass = bad == 0 && checked > 0;
    o.detail = fmt("%zu solver certificates, %zu constructions, %zu invalid", checked, constructions, bad);
    line(9, "certificate soundness", o);

    std::printf("\nopen-conjecture comparison table\n%-34s %4s %4s %8s %8s  %s\n", "instance", "n", "n2", "f(PxP)",
                "f(TxT')", "status");
    for (const auto& r : t.result.records)
      std::printf("%-34s %4lld %4lld %8lld %8lld  %s\n", r.instance.c_str(), value_of(r, "n"), value_of(r, "n2"),
                  value_of(r, "f_paths"), value_of(r, "f_pair"), r.note.c_str());
    std::printf("\n");
    const auto s = summarize(t.result.records);
    Outcome scan;
    scan.pass = t.result.errors.empty() && s.report_only == static_cast<int>(kMainTheoremPairs) &&
                static_cast<std::size_t>(s.report_only) == t.result.records.size();
    scan.detail = fmt("%d pairs compared, %d finding(s) (report-only)", s.report_only, s.findings);
    line(10, "open-conjecture scan", scan);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--stretch")) {
      stretch = true;
    } else if (!std::strcmp(argv[i], "--reports") && i + 1 < argc) {
      report_dir = argv[++i];
      std::filesystem::create_directories(report_dir);
    } else {
      std::fprintf(stderr, "usage: %s [--stretch] [--reports DIR]\n", argv[0]);
      return 2;
    }
  }
  try {
    if (stretch)
      run_stretch();
    else
      run_all();
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "ALL PASS", failures);
  return failures ? 1 : 0;
}
