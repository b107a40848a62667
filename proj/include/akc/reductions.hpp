#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "akc/cnf.hpp"
#include "akc/engagement.hpp"
#include "akc/graph.hpp"

namespace akc {

struct ReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliqueInstance {
    Graph graph;
    int ell = 1;
};

enum class ReductionKind { Thm1, Thm2, SatK3, SatK4Plus };

const char* to_string(ReductionKind kind);

// Id layout of a clique-to-AKC instance built by edge subdivision: source
// vertices keep their ids, the subdivision vertex of source_edges[e] is
// source_n + e.
struct Thm1Layout {
    int source_n = 0;
    std::vector<std::pair<VertexId, VertexId>> source_edges;  // sorted, u < v

    VertexId subdivision_vertex(int edge_index) const { return source_n + edge_index; }
};

// Id layout of the copy/green construction. Copies are indexed by ordered
// row pairs (i,j), i != j, each holding source_n vertices; green vertices
// follow, one per (unordered row pair, source edge). The green for rows
// i < j and edge (r,s), r < s, joins copy vertex (i,j,r) to (j,i,s).
struct Thm2Layout {
    int ell = 0;
    int source_n = 0;
    std::vector<std::pair<VertexId, VertexId>> source_edges;  // sorted, u < v
    VertexId green_base = 0;

    int ordered_pair_index(int i, int j) const { return i * (ell - 1) + (j < i ? j : j - 1); }
    VertexId copy_vertex(int i, int j, int r) const {
        return ordered_pair_index(i, j) * source_n + r;
    }
    int unordered_pair_rank(int i, int j) const {  // requires i < j
        return i * (2 * ell - i - 1) / 2 + (j - i - 1);
    }
    VertexId green_vertex(int i, int j, int edge_index) const {  // requires i < j
        return green_base +
               unordered_pair_rank(i, j) * static_cast<int>(source_edges.size()) + edge_index;
    }
    int green_count() const {
        return ell * (ell - 1) / 2 * static_cast<int>(source_edges.size());
    }
};

// Ids of the named vertices of the k=3 SAT construction. Gadget vertices
// (the T and W copies) are not needed for witnesses and are only reachable
// through labels.
struct SatK3Layout {
    int n = 0;  // variables
    int m = 0;  // clauses
    std::vector<VertexId> r, x, xbar, y, ybar, c;
};

// Ids of the named vertices of the k>=4 SAT construction.
struct SatK4Layout {
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<VertexId> r, x, xbar, c;
    std::vector<std::vector<VertexId>> y_members;  // per variable, k-1 ids
    std::vector<std::vector<VertexId>> z_members;  // per variable, (k-1)^2 ids
    std::vector<std::vector<VertexId>> u_members;  // per clause, k-1 ids
    std::vector<std::vector<VertexId>> w_members;  // per clause, (k-1)^2 ids
};

// A constructed hardness instance. Every vertex of instance.graph carries a
// label linking it to its source object; the layout gives direct id access
// for witness embedding and extraction. The source instance rides along so
// witnesses can be validated.
struct ReducedInstance {
    AkcInstance instance;
    ReductionKind kind = ReductionKind::Thm1;
    std::variant<Thm1Layout, Thm2Layout, SatK3Layout, SatK4Layout> layout;
    std::variant<CliqueInstance, CnfFormula> source;
};

// Either a clique (vertex set of the source graph) or a truth assignment.
using SourceWitness = std::variant<std::vector<VertexId>, std::vector<bool>>;

// The incidence-style graph of a restricted formula: per variable a spine
// r_i - x_i, r_i - x̄_i, per clause a vertex c_j adjacent to its literals.
// The formula must pass validate_restricted.
Graph formula_graph(const CnfFormula& phi);

// Planar gadget on 2n+3 vertices: a triangular ladder a_1..a_{2n+2} plus an
// apex joined to both ends. The apex is the single degree-2 vertex and the
// attachment point; every other vertex has degree 3 or 4. The gadget alone
// is 2-degenerate (empty 3-core), but one extra edge at the apex gives it
// minimum degree 3.
std::pair<Graph, VertexId> gadget_T(int n);

// Planar gadget on 5 vertices: K_4 plus a pendant attachment vertex, the
// single degree-1 vertex. The K_4 keeps minimum degree 3 with or without
// the pendant.
std::pair<Graph, VertexId> gadget_W();

// Subdivide every source edge; k = ell-1, b = C(ell,2), p = ell + C(ell,2).
// Requires ell >= 4.
ReducedInstance reduce_clique_thm1(const CliqueInstance& src);

// Copy/green/cycle construction with k = 3, b = C(ell,2), p = 3b. Requires
// ell >= 4 so the row cycles are simple.
ReducedInstance reduce_clique_thm2(const CliqueInstance& src);

// Subdivided formula graph with T gadgets on r_i and c_j and W gadgets on
// singly-occurring literals; k = 3, b = n, p = |V| - 2n.
ReducedInstance reduce_sat_k3(const CnfFormula& phi);

// Formula graph with degree-boosting stars: Y_i/Z_i on r_i and U_j/W_j on
// c_j; b = n((k-1)^2+1) + m(k-1)^2, p = b + nk + mk = |V| - n. Requires
// k >= 4.
ReducedInstance reduce_sat_k4plus(const CnfFormula& phi, int k);

// Builds the solution the constructive direction of the corresponding
// theorem prescribes; validates the witness against the source first and
// checks the result with verify_solution before returning.
Solution embed_witness(const ReducedInstance& red, const SourceWitness& witness);

// Recovers a source witness from any valid solution, asserting the
// structural facts the reverse direction of the proof guarantees. Assertion
// failures throw ReductionError: they indicate a solver or construction bug.
SourceWitness extract_witness(const ReducedInstance& red, const Solution& sol);

}  // namespace akc
