#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "decycle/cache.hpp"
#include "decycle/fvs.hpp"
#include "decycle/instance.hpp"

namespace decycle {

enum class Verdict { pass, fail, report_only };
std::string to_string(Verdict v);

using ValueMap = std::map<std::string, long long>;

/// One checked instance of a claim. The verdict is a function of claim_id and
/// the computed values alone, so any record can be re-audited.
struct CheckRecord {
  std::string claim_id;
  std::string instance;
  std::string expected;
  ValueMap computed;
  Verdict verdict = Verdict::fail;
  double wall_seconds = 0.0;
  std::string note;
  std::vector<Vertex> certificate;
};

/// Re-evaluates the relation named by claim_id on the computed values.
Verdict evaluate(const std::string& claim_id, const ValueMap& computed);
inline bool is_self_consistent(const CheckRecord& r) { return evaluate(r.claim_id, r.computed) == r.verdict; }

/// Solver front end shared by the checks: consults the cache, runs the
/// branch-and-reduce solver on a miss and validates every certificate it hands out.
class SolveContext {
 public:
  explicit SolveContext(SolverBudget budget = {}, Cache* cache = nullptr) : budget_(budget), cache_(cache) {}

  DecyclingCertificate solve(const Instance& inst, const SolveHints& hints = {});

  std::uint64_t solver_calls() const { return solver_calls_; }
  std::uint64_t cache_hits() const { return cache_hits_; }
  std::uint64_t certificates_checked() const { return certificates_checked_; }
  const SolverBudget& budget() const { return budget_; }

 private:
  SolverBudget budget_;
  Cache* cache_;
  std::atomic<std::uint64_t> solver_calls_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
  std::atomic<std::uint64_t> certificates_checked_{0};
};

/// ∇(T □ T') >= n - 1, with equality when T' is a star. Requires 2 <= n <= n'.
CheckRecord check_main_theorem(SolveContext& ctx, const Graph& t, const Graph& t2);
/// f(T □ S_{n'}) = n·n' - n + 1 and the star-layer construction has size n - 1.
CheckRecord check_star_formula(SolveContext& ctx, const Graph& t, int n_star);
/// ∇(T □ T') = n - 1 exactly when a star sits where the characterization
/// says: either factor if n = n', the larger one if n < n'.
CheckRecord check_equality_characterization(SolveContext& ctx, const Graph& t, const Graph& t2);
/// n' <= ∇(T □ S_{n'}) <= n - 1 for a non-star T and 2 <= n' < n. When
/// n' = n - 1 the forest number must also equal n'^2.
CheckRecord check_small_star_range(SolveContext& ctx, const Graph& t, int n_star);
/// ∇(T □ P_2) = α'(T), backed by the vertex-cover construction.
CheckRecord check_prism(SolveContext& ctx, const Graph& t);
/// ∇(G1 □ G2) >= α'(G1)·α'(G2), backed by the disjoint C_4 family.
CheckRecord check_matching_bound(SolveContext& ctx, const Graph& g1, const Graph& g2);
/// ∇(C_n □ C_n') against ⌈3n'/2⌉ (n = 4) or ⌈(nn' + 2)/3⌉.
CheckRecord check_torus_formula(SolveContext& ctx, int n, int n2);
/// L <= ∇(P_n □ P_n') <= L + 1 with L = ⌈((n - 1)(n' - 1) + 1)/3⌉.
CheckRecord check_grid_bounds(SolveContext& ctx, int n, int n2);
/// Branch-and-reduce value against the exhaustive oracle.
CheckRecord check_oracle_equivalence(SolveContext& ctx, const Instance& inst);

/// f(P_n □ P_n') <= f(T □ T') for every tree pair of orders 2 <= n <= n' <=
/// n_max. Report-only: a violation is flagged in the note, never a failure.
std::vector<CheckRecord> scan_open_conjecture(SolveContext& ctx, int n_max);

}  // namespace decycle
