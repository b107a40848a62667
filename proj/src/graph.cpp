#include "akc/graph.hpp"

#include <algorithm>

namespace akc {

namespace {

std::string pair_str(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_vertex(const Graph& g, VertexId v, const char* what) {
    if (!g.has_vertex(v)) {
        throw GraphError(std::string(what) + ": vertex id " + std::to_string(v) +
                         " out of range [0," + std::to_string(g.vertex_count()) + ")");
    }
}

}  // namespace

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    if (!has_vertex(v)) {
        throw GraphError("neighbors: vertex id " + std::to_string(v) + " out of range");
    }
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

const std::string& Graph::label(VertexId v) const {
    if (!has_vertex(v)) {
        throw GraphError("label: vertex id " + std::to_string(v) + " out of range");
    }
    return labels_[v];
}

Graph Graph::with_label(VertexId v, std::string text) const {
    if (!has_vertex(v)) {
        throw GraphError("with_label: vertex id " + std::to_string(v) + " out of range");
    }
    Graph out = *this;
    out.labels_[v] = std::move(text);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::check_invariants() const {
    long long half_edges = 0;
    for (VertexId u = 0; u < vertex_count(); ++u) {
        const auto& nb = adj_[u];
        if (!std::is_sorted(nb.begin(), nb.end())) {
            throw GraphError("invariant: adjacency of " + std::to_string(u) + " not sorted");
        }
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw GraphError("invariant: parallel edge at vertex " + std::to_string(u));
        }
        for (VertexId v : nb) {
            if (v == u) throw GraphError("invariant: self-loop at " + std::to_string(u));
            if (v < 0 || v >= vertex_count()) {
                throw GraphError("invariant: dangling neighbor id at " + std::to_string(u));
            }
            if (!has_edge(v, u)) {
                throw GraphError("invariant: asymmetric edge " + pair_str(u, v));
            }
        }
        half_edges += static_cast<long long>(nb.size());
    }
    if (half_edges != 2 * edge_count_) {
        throw GraphError("invariant: edge count mismatch");
    }
}

Graph build_graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
                  std::vector<std::string> labels) {
    if (vertex_count < 0) throw GraphError("build_graph: negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
        throw GraphError("build_graph: label count does not match vertex count");
    }
    Graph g;
    g.adj_.assign(vertex_count, {});
    g.labels_ = labels.empty() ? std::vector<std::string>(vertex_count) : std::move(labels);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw GraphError("build_graph: edge " + pair_str(u, v) + " has out-of-range id");
        }
        if (u == v) throw GraphError("build_graph: self-loop " + pair_str(u, v));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (VertexId u = 0; u < vertex_count; ++u) {
        auto& nb = g.adj_[u];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) {
            throw GraphError("build_graph: duplicate edge " + pair_str(u, *dup));
        }
    }
    return g;
}

std::pair<Graph, VertexId> subdivide_edge(const Graph& g, VertexId u, VertexId v,
                                          const std::string& label) {
    require_vertex(g, u, "subdivide_edge");
    require_vertex(g, v, "subdivide_edge");
    if (!g.has_edge(u, v)) {
        throw GraphError("subdivide_edge: missing edge " + pair_str(u, v));
    }
    Graph out = g;
    VertexId w = out.vertex_count();
    auto erase_from = [](std::vector<VertexId>& nb, VertexId x) {
        nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
    };
    erase_from(out.adj_[u], v);
    erase_from(out.adj_[v], u);
    out.adj_[u].push_back(w);  // w is the largest id, so sortedness is kept
    out.adj_[v].push_back(w);
    out.adj_.push_back({std::min(u, v), std::max(u, v)});
    out.labels_.push_back(label);
    out.edge_count_ += 1;  // one edge removed, two added
    return {std::move(out), w};
}

Graph attach_identify(const Graph& host, const Graph& gadget, VertexId gadget_vertex,
                      VertexId host_vertex, std::vector<VertexId>* gadget_map) {
    require_vertex(gadget, gadget_vertex, "attach_identify");
    require_vertex(host, host_vertex, "attach_identify");
    Graph out = host;
    std::vector<VertexId> map(gadget.vertex_count());
    VertexId next = host.vertex_count();
    for (VertexId v = 0; v < gadget.vertex_count(); ++v) {
        map[v] = (v == gadget_vertex) ? host_vertex : next++;
    }
    out.adj_.resize(next);
    out.labels_.resize(next);
    for (VertexId v = 0; v < gadget.vertex_count(); ++v) {
        if (v != gadget_vertex) out.labels_[map[v]] = gadget.label(v);
        for (VertexId w : gadget.neighbors(v)) {
            if (v < w) {
                out.adj_[map[v]].push_back(map[w]);
                out.adj_[map[w]].push_back(map[v]);
                ++out.edge_count_;
            }
        }
    }
    for (auto& nb : out.adj_) std::sort(nb.begin(), nb.end());
    if (gadget_map) *gadget_map = std::move(map);
    return out;
}

bool euler_planar_bound(const Graph& g) {
    long long n = g.vertex_count();
    long long m = g.edge_count();
    if (n < 3) return m <= std::max<long long>(0, n - 1);
    return m <= 3 * n - 6;
}

std::map<VertexId, int> induced_degrees(const Graph& g, const std::vector<VertexId>& S) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (VertexId v : S) {
        require_vertex(g, v, "induced_degrees");
        in_s[v] = 1;
    }
    std::map<VertexId, int> out;
    for (VertexId v : S) {
        int d = 0;
        for (VertexId u : g.neighbors(v)) d += in_s[u];
        out[v] = d;
    }
    return out;
}

}  // namespace akc
