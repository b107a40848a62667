#pragma once

#include <span>
#include <string>
#include <vector>

#include "akc/graph.hpp"

namespace akc {

// One problem instance: graph plus threshold k, anchor budget b and target
// core size p. planar_claim is a trust tag set by constructions/generators
// that guarantee planarity; it is sanity-checked against the Euler bound
// where it matters but never certified.
struct AkcInstance {
    Graph graph;
    int k = 1;
    int b = 0;
    int p = 0;
    bool planar_claim = false;

    static AkcInstance make(Graph g, int k, int b, int p, bool planar_claim = false);
};

// Candidate answer: anchors B and core H, both sorted ascending. Validity
// against an instance is decided by verify_solution, never assumed.
struct Solution {
    std::vector<VertexId> anchors;
    std::vector<VertexId> core;
};

// Ordered record of the withdrawal cascade: (vertex, induced degree at the
// moment of removal) for every vertex that dropped out.
struct CascadeTrace {
    std::vector<std::pair<VertexId, int>> removal_order;
};

// Engaged-player set of a strategy profile.
struct StrategyProfile {
    std::vector<VertexId> engaged;
};

struct ClosureResult {
    std::vector<VertexId> core;
    CascadeTrace trace;
};

// The unique maximal vertex set whose induced subgraph has minimum degree
// >= k, by iterated deletion. k = 0 returns all vertices.
std::vector<VertexId> k_core(const Graph& g, int k);

// The unique maximum H with anchors ⊆ H and every non-anchor of H having at
// least k neighbors inside H. The trace lists all of V∖H in the removal
// schedule "lowest current induced degree first, ties by lowest id", which
// makes traces reproducible; any schedule yields the same H.
ClosureResult anchored_closure(const Graph& g, int k, const std::vector<VertexId>& anchors);

struct VerifyResult {
    bool ok = false;
    std::string reason;    // first violated condition, empty when ok
    VertexId witness = -1; // offending vertex where one exists
};

// Checks B ⊆ H ⊆ V, |B| <= b, |H| >= p and the degree condition, in that
// order; reports the first violation.
VerifyResult verify_solution(const AkcInstance& inst, const Solution& sol);

// 0 for a non-engaged player, otherwise engaged neighbors minus k.
int payoff(const Graph& g, int k, const StrategyProfile& profile, VertexId v);

struct NashResult {
    bool ok = false;
    std::string reason;
    VertexId witness = -1;
};

// Pure Nash equilibrium check: no engaged player has fewer than k engaged
// neighbors, and no outsider has k or more.
NashResult nash_check(const Graph& g, int k, const StrategyProfile& profile);

// Reusable peeling engine over a fixed (graph, k). One instance per thread;
// the graph itself may be shared. run() computes the anchored closure of the
// given anchor set in O(|V|+|E|) without producing a trace; the result stays
// readable until the next run().
class ClosureEngine {
public:
    ClosureEngine(const Graph& g, int k);

    // Returns |H|. Anchors must be valid vertex ids (duplicates are fine).
    int run(std::span<const VertexId> anchors);

    bool in_core(VertexId v) const { return !dropped_[v]; }
    int core_size() const { return core_size_; }
    std::vector<VertexId> core_vertices() const;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> offset_;   // CSR offsets into nbr_
    std::vector<VertexId> nbr_;
    std::vector<int> base_deg_;
    std::vector<int> deg_;
    std::vector<char> dropped_;
    std::vector<char> anchor_;
    std::vector<VertexId> stack_;
    int core_size_ = 0;
};

}  // namespace akc
