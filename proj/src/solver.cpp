#include "akc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace akc {

namespace {

using Clock = std::chrono::steady_clock;

bool planar_bound_trusted(const AkcInstance& inst) {
    return inst.planar_claim && inst.k >= 7 && euler_planar_bound(inst.graph);
}

// Sum of C(m, i) for i <= t, saturating; used only to pick the cheaper of
// two exact search spaces.
double subset_space(int m, int t) {
    double total = 0.0, term = 1.0;
    for (int i = 0; i <= t; ++i) {
        total += term;
        if (total > 1e18) return 1e18;
        term = term * (m - i) / (i + 1);
        if (term < 0) break;
    }
    return total;
}

struct AnchorSearch {
    ClosureEngine& eng;
    const std::vector<VertexId>& pool;
    int bcap;
    bool use_bound;
    std::optional<Clock::time_point> deadline;

    long long nodes = 0;
    bool timed_out = false;
    bool done = false;  // best can no longer be beaten
    int best_size = -1;
    std::vector<VertexId> best_anchors;
    std::vector<VertexId> best_core;
    int global_cap = 0;

    std::vector<VertexId> cur;
    std::vector<VertexId> bound_buf;

    void record_if_better(int size) {
        if (size > best_size) {
            best_size = size;
            best_anchors = cur;
            best_core = eng.core_vertices();
            if (best_size >= global_cap) done = true;
        }
    }

    void dfs(size_t start) {
        if (deadline && (nodes & 63) == 0 && Clock::now() > *deadline) {
            timed_out = true;
            return;
        }
        ++nodes;
        record_if_better(eng.run(cur));
        if (done || timed_out) return;
        if (static_cast<int>(cur.size()) >= bcap || start >= pool.size()) return;
        if (use_bound) {
            // Anchoring everything still selectable bounds all completions.
            bound_buf.assign(cur.begin(), cur.end());
            bound_buf.insert(bound_buf.end(), pool.begin() + start, pool.end());
            if (eng.run(bound_buf) <= best_size) return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            dfs(i + 1);
            cur.pop_back();
            if (done || timed_out) return;
        }
    }
};

// Decides the instance by enumerating excluded sets X (H = V ∖ X) in order
// of increasing |X|; feasibility is "at most b deficient members". Exact for
// the decision and, on yes, for the optimum, because every H with |H| >= p
// appears in the enumeration. Used when |V| - p is small.
struct ExclusionSearch {
    const AkcInstance& inst;
    std::optional<Clock::time_point> deadline;

    long long nodes = 0;
    bool timed_out = false;
    bool found = false;
    std::vector<VertexId> best_excluded;

    std::vector<int> deg;

    bool feasible(const std::vector<VertexId>& excluded) {
        const Graph& g = inst.graph;
        deg.assign(g.vertex_count(), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
        std::vector<char> out(g.vertex_count(), 0);
        for (VertexId x : excluded) out[x] = 1;
        for (VertexId x : excluded) {
            for (VertexId u : g.neighbors(x)) {
                if (!out[u]) --deg[u];
            }
        }
        int deficient = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!out[v] && deg[v] < inst.k) {
                if (++deficient > inst.b) return false;
            }
        }
        return true;
    }

    void run(int max_excluded) {
        std::vector<VertexId> x;
        for (int s = 0; s <= max_excluded && !found && !timed_out; ++s) {
            x.assign(s, 0);
            enumerate(x, 0, 0, s);
        }
    }

    void enumerate(std::vector<VertexId>& x, size_t pos, VertexId from, int s) {
        if (timed_out || found) return;
        if (static_cast<int>(pos) == s) {
            if (deadline && (nodes & 63) == 0 && Clock::now() > *deadline) {
                timed_out = true;
                return;
            }
            ++nodes;
            if (feasible(x)) {
                found = true;
                best_excluded = x;
            }
            return;
        }
        const int n = inst.graph.vertex_count();
        for (VertexId v = from; v < n; ++v) {
            x[pos] = v;
            enumerate(x, pos + 1, v + 1, s);
            if (timed_out || found) return;
        }
    }
};

void check_planar_postcondition(const AkcInstance& inst, const SolveReport& report) {
    if (!planar_bound_trusted(inst)) return;
    long long h = static_cast<long long>(report.best.core.size());
    long long bsize = static_cast<long long>(report.best.anchors.size());
    if (h > 7 * bsize || h > 7LL * inst.b) {
        throw GraphError("planar 7b certificate violated by solver output; "
                         "the planar tag on this instance cannot be trusted");
    }
}

SolveReport finish_report(const AkcInstance& inst, const SolveOptions& opts, SolveReport report,
                          Clock::time_point started) {
    int p = opts.size_window ? opts.size_window->first : inst.p;
    if (report.decision != Decision::Unknown) {
        report.decision = report.optimum_size >= p ? Decision::Yes : Decision::No;
    } else if (report.optimum_size >= p) {
        report.decision = Decision::Yes;  // a found witness survives a timeout
    }
    if (opts.size_window && report.optimum_size > opts.size_window->second) {
        if (!report.note.empty()) report.note += "; ";
        report.note += "optimum exceeds the size window upper bound";
    }
    report.wall_time_s =
        std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - started)
            .count();
    check_planar_postcondition(inst, report);
    return report;
}

SolveReport run_solver(const AkcInstance& inst, const SolveOptions& opts, bool branch_bound) {
    auto started = Clock::now();
    if (opts.size_window && opts.size_window->first > opts.size_window->second) {
        throw GraphError("solve: size window has p_low > q_high");
    }
    const Graph& g = inst.graph;
    SolveReport report;

    std::optional<Clock::time_point> deadline;
    if (opts.time_limit_s) {
        deadline = started + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(*opts.time_limit_s));
    }

    if (branch_bound) {
        if (auto immediate = planar_prefilter(inst)) {
            // p > 7b on a trusted planar instance: no search needed. The
            // reported solution is the empty-anchor baseline.
            ClosureEngine eng(g, inst.k);
            eng.run({});
            report.best.core = eng.core_vertices();
            report.optimum_size = eng.core_size();
            report.decision = *immediate;
            report.prefilter_fired = true;
            report.note = "planar prefilter: p > 7b";
            report.wall_time_s = std::chrono::duration_cast<std::chrono::duration<double>>(
                                     Clock::now() - started)
                                     .count();
            return report;
        }
    }

    std::vector<VertexId> pool;
    if (opts.candidate_pool_override) {
        pool = *opts.candidate_pool_override;
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (VertexId v : pool) {
            if (!g.has_vertex(v)) {
                throw GraphError("solve: pool override id " + std::to_string(v) +
                                 " out of range");
            }
        }
    } else {
        pool = candidate_anchor_pool(g, inst.k);
    }
    int bcap = std::min<int>(inst.b, static_cast<int>(pool.size()));
    if (inst.b > static_cast<int>(pool.size())) {
        report.budget_clamped = true;
        report.note = "anchor budget clamped to candidate pool size " +
                      std::to_string(pool.size());
    }

    const int p = opts.size_window ? opts.size_window->first : inst.p;
    const int window = g.vertex_count() - p;  // negative when p is unreachable
    bool use_exclusion = false;
    if (branch_bound && !opts.candidate_pool_override && window >= 0) {
        use_exclusion = subset_space(g.vertex_count(), window) <
                        subset_space(static_cast<int>(pool.size()), bcap);
    }

    if (use_exclusion) {
        ExclusionSearch search{inst, deadline};
        search.run(window);
        report.nodes_explored = search.nodes;
        if (search.found) {
            std::vector<char> out(g.vertex_count(), 0);
            for (VertexId v : search.best_excluded) out[v] = 1;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (!out[v]) report.best.core.push_back(v);
            }
            // The deficient members are the canonical anchor set.
            auto deg = induced_degrees(g, report.best.core);
            for (VertexId v : report.best.core) {
                if (deg.at(v) < inst.k) report.best.anchors.push_back(v);
            }
            report.optimum_size = static_cast<int>(report.best.core.size());
        } else {
            ClosureEngine eng(g, inst.k);
            eng.run({});
            report.best.core = eng.core_vertices();
            report.optimum_size = eng.core_size();
            if (!search.timed_out) {
                if (!report.note.empty()) report.note += "; ";
                report.note += "no core of size >= p exists; reporting the empty-anchor baseline";
            }
        }
        if (search.timed_out && report.optimum_size < p) report.decision = Decision::Unknown;
        return finish_report(inst, opts, std::move(report), started);
    }

    ClosureEngine eng(g, inst.k);
    AnchorSearch search{eng, pool, bcap, branch_bound, deadline};
    search.global_cap = eng.run(pool);
    search.dfs(0);
    report.nodes_explored = search.nodes;
    report.optimum_size = std::max(search.best_size, 0);
    report.best.anchors = search.best_anchors;
    report.best.core = search.best_core;
    if (search.timed_out && search.best_size < p) report.decision = Decision::Unknown;
    return finish_report(inst, opts, std::move(report), started);
}

}  // namespace

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        default: return "unknown";
    }
}

std::vector<VertexId> candidate_anchor_pool(const Graph& g, int k) {
    std::vector<VertexId> core = k_core(g, k);
    std::vector<char> in_core(g.vertex_count(), 0);
    for (VertexId v : core) in_core[v] = 1;
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!in_core[v]) pool.push_back(v);
    }
    return pool;
}

SolveReport solve_exhaustive(const AkcInstance& inst, const SolveOptions& opts) {
    return run_solver(inst, opts, false);
}

SolveReport solve_branch_bound(const AkcInstance& inst, const SolveOptions& opts) {
    return run_solver(inst, opts, true);
}

SolveReport solve(const AkcInstance& inst, const SolveOptions& opts) {
    return opts.strategy == Strategy::Exhaustive ? solve_exhaustive(inst, opts)
                                                 : solve_branch_bound(inst, opts);
}

DegreeRatio planar_degree_ratio(const Graph& g, int k) {
    if (k < 7) {
        throw GraphError("planar_degree_ratio: unsupported k = " + std::to_string(k) +
                         " (requires k >= 7)");
    }
    if (!euler_planar_bound(g)) {
        throw GraphError("planar_degree_ratio: graph fails the Euler edge bound, refusing");
    }
    DegreeRatio ratio;
    ratio.vertex_count = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= k) ++ratio.high_degree_count;
    }
    if (ratio.vertex_count > 0 && 7LL * ratio.high_degree_count >= 6LL * ratio.vertex_count) {
        throw GraphError("planar_degree_ratio: ratio bound m/n < 6/7 violated; "
                         "the graph cannot be planar");
    }
    return ratio;
}

std::optional<Decision> planar_prefilter(const AkcInstance& inst) {
    if (!planar_bound_trusted(inst)) return std::nullopt;
    if (static_cast<long long>(inst.p) > 7LL * inst.b) return Decision::No;
    return std::nullopt;
}

}  // namespace akc
