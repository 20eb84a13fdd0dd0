#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decycle/suites.hpp"

namespace decycle {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

struct SweepOptions {
  std::string suite;
  int n_max = 0;  // 0 picks the suite's default
  int n_star_max = 8;
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  int random_pairs = 100;
  int random_factor_order = 7;
  int random_graphs = 50;
};

struct SweepResult {
  std::vector<CheckRecord> records;  // sorted by (claim_id, instance)
  std::vector<std::string> errors;   // budget exhaustion and other aborted instances
  nlohmann::json meta;
};

/// Registered suite names, in the order `all` runs them.
const std::vector<std::string>& suite_names();
int default_n_max(const std::string& suite);

/// Runs every instance of a suite, spreading them over `workers` threads.
/// Instances that exhaust the budget are listed in `errors`; the remaining
/// records are still returned. std::invalid_argument for an unknown suite.
SweepResult run_sweep(const SweepOptions& opts, SolveContext& ctx);

/// 0 iff no record failed and no instance aborted.
int exit_status(const SweepResult& r);

/// Writes <prefix>.csv and <prefix>.json.
void write_reports(const SweepResult& r, const std::string& prefix);

/// Connected graph on n vertices: a uniform random labeled tree plus each
/// remaining pair with probability p.
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);
std::vector<std::pair<Graph, Graph>> random_factor_pairs(std::uint64_t seed, int count, int max_order);
std::vector<Graph> random_graphs(std::uint64_t seed, int count, int min_order, int max_order);

}  // namespace decycle
