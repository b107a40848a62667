#include "akc/engagement.hpp"

#include <algorithm>
#include <cstring>
#include <set>

namespace akc {

AkcInstance AkcInstance::make(Graph g, int k, int b, int p, bool planar_claim) {
    if (k < 1) throw GraphError("instance: k must be >= 1");
    if (b < 0) throw GraphError("instance: b must be >= 0");
    if (p < 0) throw GraphError("instance: p must be >= 0");
    return AkcInstance{std::move(g), k, b, p, planar_claim};
}

std::vector<VertexId> k_core(const Graph& g, int k) {
    return anchored_closure(g, k, {}).core;
}

ClosureResult anchored_closure(const Graph& g, int k, const std::vector<VertexId>& anchors) {
    const int n = g.vertex_count();
    std::vector<char> anchor(n, 0);
    for (VertexId v : anchors) {
        if (!g.has_vertex(v)) {
            throw GraphError("anchored_closure: anchor id " + std::to_string(v) +
                             " out of range");
        }
        anchor[v] = 1;
    }

    std::vector<int> deg(n);
    for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);

    // Deficient non-anchors keyed by (current degree, id): the schedule pops
    // the globally smallest pair, so traces are deterministic.
    std::set<std::pair<int, VertexId>> deficient;
    for (VertexId v = 0; v < n; ++v) {
        if (!anchor[v] && deg[v] < k) deficient.insert({deg[v], v});
    }

    std::vector<char> removed(n, 0);
    CascadeTrace trace;
    while (!deficient.empty()) {
        auto [d, v] = *deficient.begin();
        deficient.erase(deficient.begin());
        removed[v] = 1;
        trace.removal_order.emplace_back(v, d);
        for (VertexId u : g.neighbors(v)) {
            if (removed[u]) continue;
            int old = deg[u]--;
            if (anchor[u]) continue;
            if (old < k) {
                deficient.erase({old, u});
                deficient.insert({old - 1, u});
            } else if (old == k) {
                deficient.insert({old - 1, u});
            }
        }
    }

    ClosureResult out;
    for (VertexId v = 0; v < n; ++v) {
        if (!removed[v]) out.core.push_back(v);
    }
    out.trace = std::move(trace);
    return out;
}

VerifyResult verify_solution(const AkcInstance& inst, const Solution& sol) {
    const Graph& g = inst.graph;
    for (VertexId v : sol.core) {
        if (!g.has_vertex(v)) {
            return {false, "core vertex out of range", v};
        }
    }
    std::vector<char> in_core(g.vertex_count(), 0);
    for (VertexId v : sol.core) in_core[v] = 1;
    std::vector<char> in_b(g.vertex_count(), 0);
    for (VertexId v : sol.anchors) {
        if (!g.has_vertex(v)) {
            return {false, "anchor vertex out of range", v};
        }
        if (!in_core[v]) {
            return {false, "anchor not contained in core", v};
        }
        in_b[v] = 1;
    }
    if (static_cast<int>(sol.anchors.size()) > inst.b) {
        return {false, "anchor budget exceeded: |B| = " + std::to_string(sol.anchors.size()) +
                           " > b = " + std::to_string(inst.b),
                -1};
    }
    if (static_cast<int>(sol.core.size()) < inst.p) {
        return {false, "core too small: |H| = " + std::to_string(sol.core.size()) +
                           " < p = " + std::to_string(inst.p),
                -1};
    }
    for (VertexId v : sol.core) {
        if (in_b[v]) continue;
        int d = 0;
        for (VertexId u : g.neighbors(v)) d += in_core[u];
        if (d < inst.k) {
            return {false, "non-anchor with induced degree " + std::to_string(d) + " < k", v};
        }
    }
    return {true, "", -1};
}

int payoff(const Graph& g, int k, const StrategyProfile& profile, VertexId v) {
    if (!g.has_vertex(v)) {
        throw GraphError("payoff: vertex id " + std::to_string(v) + " out of range");
    }
    std::vector<char> engaged(g.vertex_count(), 0);
    bool v_engaged = false;
    for (VertexId u : profile.engaged) {
        if (!g.has_vertex(u)) {
            throw GraphError("payoff: engaged id " + std::to_string(u) + " out of range");
        }
        engaged[u] = 1;
        if (u == v) v_engaged = true;
    }
    if (!v_engaged) return 0;
    int d = 0;
    for (VertexId u : g.neighbors(v)) d += engaged[u];
    return d - k;
}

NashResult nash_check(const Graph& g, int k, const StrategyProfile& profile) {
    std::vector<char> engaged(g.vertex_count(), 0);
    for (VertexId u : profile.engaged) {
        if (!g.has_vertex(u)) {
            throw GraphError("nash_check: engaged id " + std::to_string(u) + " out of range");
        }
        engaged[u] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int d = 0;
        for (VertexId u : g.neighbors(v)) d += engaged[u];
        if (engaged[v] && d < k) {
            return {false, "engaged vertex has only " + std::to_string(d) + " engaged neighbors",
                    v};
        }
        if (!engaged[v] && d >= k) {
            return {false, "outsider has " + std::to_string(d) + " engaged neighbors", v};
        }
    }
    return {true, "", -1};
}

ClosureEngine::ClosureEngine(const Graph& g, int k) : n_(g.vertex_count()), k_(k) {
    offset_.resize(n_ + 1, 0);
    for (VertexId v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    nbr_.resize(offset_[n_]);
    base_deg_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
        base_deg_[v] = g.degree(v);
        std::copy(g.neighbors(v).begin(), g.neighbors(v).end(), nbr_.begin() + offset_[v]);
    }
    deg_.resize(n_);
    dropped_.resize(n_);
    anchor_.resize(n_);
    stack_.reserve(n_);
}

int ClosureEngine::run(std::span<const VertexId> anchors) {
    if (n_ == 0) {
        core_size_ = 0;
        return 0;
    }
    std::memcpy(deg_.data(), base_deg_.data(), sizeof(int) * n_);
    std::memset(dropped_.data(), 0, n_);
    std::memset(anchor_.data(), 0, n_);
    for (VertexId v : anchors) anchor_[v] = 1;

    stack_.clear();
    for (VertexId v = 0; v < n_; ++v) {
        if (!anchor_[v] && deg_[v] < k_) {
            stack_.push_back(v);
            dropped_[v] = 1;
        }
    }
    int removed = static_cast<int>(stack_.size());
    while (!stack_.empty()) {
        VertexId v = stack_.back();
        stack_.pop_back();
        for (int i = offset_[v]; i < offset_[v + 1]; ++i) {
            VertexId u = nbr_[i];
            if (dropped_[u]) continue;
            if (--deg_[u] < k_ && !anchor_[u]) {
                dropped_[u] = 1;
                stack_.push_back(u);
                ++removed;
            }
        }
    }
    core_size_ = n_ - removed;
    return core_size_;
}

std::vector<VertexId> ClosureEngine::core_vertices() const {
    std::vector<VertexId> out;
    out.reserve(core_size_);
    for (VertexId v = 0; v < n_; ++v) {
        if (!dropped_[v]) out.push_back(v);
    }
    return out;
}

}  // namespace akc
