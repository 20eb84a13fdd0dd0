#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

enum class Method { oracle, branch_reduce, construction };
/// `upper_bound` marks a construction whose size is only known to be feasible.
enum class Optimality { proven, cross_checked, upper_bound };

std::string to_string(Method m);
std::string to_string(Optimality o);

/// A decycling set together with the value it witnesses.
struct DecyclingCertificate {
  VertexSet set;
  int value = 0;
  Method method = Method::branch_reduce;
  Optimality optimality = Optimality::proven;
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
};

struct SolverBudget {
  std::uint64_t node_limit = 4'000'000'000ULL;
  double time_limit_seconds = 600.0;
};

/// Extra lower-bound evidence for the solver: vertex sets that are pairwise
/// disjoint and each contain a cycle. The solver re-checks both properties and
/// ignores the hint if either fails.
struct SolveHints {
  std::vector<Mask> disjoint_cyclic_sets;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, VertexSet incumbent, int lower_bound, std::uint64_t nodes)
      : std::runtime_error(what), incumbent_(incumbent), lower_bound_(lower_bound), nodes_(nodes) {}

  const VertexSet& incumbent() const { return incumbent_; }
  int lower_bound() const { return lower_bound_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexSet incumbent_;
  int lower_bound_;
  std::uint64_t nodes_;
};

inline constexpr int kDefaultOracleOrder = 20;

/// Exhaustive minimum: subsets by increasing size, lexicographic within a
/// size; the first decycling subset is returned.
DecyclingCertificate decycling_oracle(const Graph& g, int max_order = kDefaultOracleOrder);

/// Exact minimum by branch and reduce with iterative deepening on the
/// solution size. Throws BudgetExhausted instead of returning an unproven value.
DecyclingCertificate decycling_number(const Graph& g, const SolverBudget& budget = {},
                                      const SolveHints& hints = {});

int forest_number(const Graph& g, const SolverBudget& budget = {});

/// Number of vertex-disjoint cycles found greedily.
int cycle_packing_lower_bound(const Graph& g);

/// The complement of the set induces a forest and the size matches the value.
bool certificate_is_valid(const Graph& g, const DecyclingCertificate& c);
/// Throws std::logic_error when certificate_is_valid fails.
void assert_certificate(const Graph& g, const DecyclingCertificate& c);

}  // namespace decycle
