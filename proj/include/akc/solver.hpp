#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akc/engagement.hpp"
#include "akc/graph.hpp"

namespace akc {

enum class Strategy { Exhaustive, BranchBound };
enum class Decision { Yes, No, Unknown };

const char* to_string(Decision d);

struct SolveOptions {
    Strategy strategy = Strategy::BranchBound;
    // Decide existence of a core H with p_low <= |H| <= q_high. Resolved by
    // running the optimizer and comparing; q_high is only meaningful where a
    // structural bound (the planar 7b certificate) caps every solution.
    std::optional<std::pair<int, int>> size_window;
    std::optional<double> time_limit_s;
    // Restrict anchor choices to this set instead of the default pool.
    std::optional<std::vector<VertexId>> candidate_pool_override;
};

struct SolveReport {
    Solution best;
    int optimum_size = 0;
    Decision decision = Decision::No;
    long long nodes_explored = 0;
    bool prefilter_fired = false;
    double wall_time_s = 0.0;
    bool budget_clamped = false;
    std::string note;
};

// Vertices outside the k-core. Anchoring inside the k-core never changes a
// closure, so exact search may restrict anchor sets to this pool.
std::vector<VertexId> candidate_anchor_pool(const Graph& g, int k);

// Enumerates every anchor set B from the candidate pool with |B| <= b
// (including B = ∅) in lexicographic order and keeps the largest closure;
// ties resolve to the lexicographically smallest sorted B.
SolveReport solve_exhaustive(const AkcInstance& inst, const SolveOptions& opts = {});

// Same optimum as solve_exhaustive. Prunes with the monotone closure bound
// (anchoring the whole remaining pool bounds every completion), applies the
// planar prefilter, and when the complement window |V|-p is provably the
// smaller search space, decides by enumerating excluded sets instead of
// anchor sets.
SolveReport solve_branch_bound(const AkcInstance& inst, const SolveOptions& opts = {});

// Dispatch on opts.strategy.
SolveReport solve(const AkcInstance& inst, const SolveOptions& opts = {});

// m = number of vertices with degree >= k, for planar graphs with k >= 7.
// The exact ratio m/n is always strictly below 6/7; violation of that bound
// (or of the Euler edge bound) raises an error since it falsifies the
// planar tag.
struct DegreeRatio {
    int high_degree_count = 0;  // m
    int vertex_count = 0;       // n; exact ratio is m/n
};
DegreeRatio planar_degree_ratio(const Graph& g, int k);

// Immediate "no" when a planar-tagged instance with k >= 7 asks for
// p > 7b, which no solution can reach. Empty when inapplicable or when the
// instance survives the filter.
std::optional<Decision> planar_prefilter(const AkcInstance& inst);

}  // namespace akc
