#include "akc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace akc {

namespace {

struct CliqueSearch {
    const Graph& g;
    int ell;
    long long work = 0;
    std::vector<VertexId> current;
    std::vector<VertexId> found;

    bool extend(const std::vector<VertexId>& candidates) {
        if (static_cast<int>(current.size()) == ell) {
            found = current;
            return true;
        }
        int need = ell - static_cast<int>(current.size());
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (static_cast<int>(candidates.size() - i) < need) break;
            VertexId v = candidates[i];
            ++work;
            std::vector<VertexId> next;
            for (size_t j = i + 1; j < candidates.size(); ++j) {
                if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
            }
            if (static_cast<int>(next.size()) < need - 1) continue;
            current.push_back(v);
            if (extend(next)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

OracleVerdict clique_oracle(const Graph& g, int ell, int max_vertices) {
    if (g.vertex_count() > max_vertices) {
        throw OracleGuardError("clique_oracle: graph has " + std::to_string(g.vertex_count()) +
                               " vertices, guard is " + std::to_string(max_vertices));
    }
    if (ell < 1) throw GraphError("clique_oracle: ell must be >= 1");
    OracleVerdict verdict;
    CliqueSearch search{g, ell};
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= ell - 1) candidates.push_back(v);
    }
    if (search.extend(candidates)) {
        // Re-validate before returning: the witness must be pairwise adjacent.
        for (size_t i = 0; i < search.found.size(); ++i) {
            for (size_t j = i + 1; j < search.found.size(); ++j) {
                if (!g.has_edge(search.found[i], search.found[j])) {
                    throw GraphError("clique_oracle: internal witness validation failed");
                }
            }
        }
        verdict.yes = true;
        verdict.clique = search.found;
    }
    verdict.work = search.work;
    return verdict;
}

OracleVerdict sat_oracle(const CnfFormula& phi, int max_vars) {
    if (phi.num_vars > max_vars) {
        throw OracleGuardError("sat_oracle: formula has " + std::to_string(phi.num_vars) +
                               " variables, guard is " + std::to_string(max_vars));
    }
    OracleVerdict verdict;
    const uint64_t total = uint64_t{1} << phi.num_vars;
    std::vector<bool> assignment(phi.num_vars);
    for (uint64_t mask = 0; mask < total; ++mask) {
        ++verdict.work;
        for (int i = 0; i < phi.num_vars; ++i) assignment[i] = (mask >> i) & 1;
        if (satisfies(phi, assignment)) {
            verdict.yes = true;
            verdict.assignment = assignment;
            return verdict;
        }
    }
    return verdict;
}

OracleVerdict akc_enum_oracle(const AkcInstance& inst, int max_vertices) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    if (n > max_vertices) {
        throw OracleGuardError("akc_enum_oracle: instance has " + std::to_string(n) +
                               " vertices, guard is " + std::to_string(max_vertices));
    }
    if (n > 30) throw OracleGuardError("akc_enum_oracle: guard above 30 is not supported");
    std::vector<uint64_t> adj_mask(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : g.neighbors(v)) adj_mask[v] |= uint64_t{1} << u;
    }

    OracleVerdict verdict;
    int best_size = -1;
    uint64_t best_h = 0, best_b = 0;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t h = 0; h < total; ++h) {
        ++verdict.work;
        int size = std::popcount(h);
        if (size >= inst.p && size > best_size) {
            uint64_t deficient = 0;
            for (VertexId v = 0; v < n; ++v) {
                if (!(h >> v & 1)) continue;
                if (std::popcount(adj_mask[v] & h) < inst.k) deficient |= uint64_t{1} << v;
            }
            if (std::popcount(deficient) <= inst.b) {
                best_size = size;
                best_h = h;
                best_b = deficient;
            }
        }
    }
    if (best_size >= 0) {
        Solution sol;
        for (VertexId v = 0; v < n; ++v) {
            if (best_h >> v & 1) sol.core.push_back(v);
            if (best_b >> v & 1) sol.anchors.push_back(v);
        }
        auto check = verify_solution(inst, sol);
        if (!check.ok) {
            throw GraphError("akc_enum_oracle: internal witness validation failed: " +
                             check.reason);
        }
        verdict.yes = true;
        verdict.solution = std::move(sol);
    }
    return verdict;
}

}  // namespace akc
