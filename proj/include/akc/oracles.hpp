#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akc/cnf.hpp"
#include "akc/engagement.hpp"
#include "akc/graph.hpp"

namespace akc {

struct OracleGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verdict of a brute-force search. A witness is present exactly when the
// answer is yes and has been re-validated by the relevant checker before
// being returned. work counts candidates examined.
struct OracleVerdict {
    bool yes = false;
    std::optional<std::vector<VertexId>> clique;
    std::optional<std::vector<bool>> assignment;
    std::optional<Solution> solution;
    long long work = 0;
};

// Exhaustive clique search with degree pruning. Guarded to small graphs;
// the guard is a hard error, never a silent truncation.
OracleVerdict clique_oracle(const Graph& g, int ell, int max_vertices = 20);

// Exhaustive SAT check over all 2^n assignments.
OracleVerdict sat_oracle(const CnfFormula& phi, int max_vars = 24);

// Decides the instance straight from the definition: every H ⊆ V is tested
// for "at most b deficient members and |H| >= p". Deliberately avoids the
// peeling/closure machinery so it cross-checks it. Witness is a maximum
// feasible (B,H) with B the deficient vertices of H.
OracleVerdict akc_enum_oracle(const AkcInstance& inst, int max_vertices = 15);

}  // namespace akc
