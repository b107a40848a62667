#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace akc {

using VertexId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph. Adjacency lists are kept sorted, so
// membership tests are binary searches and iteration order is deterministic.
// Vertices are never deleted; subgraphs are expressed as vertex sets over
// the parent graph, which keeps ids stable across a whole pipeline.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(VertexId u, VertexId v) const;

    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    const std::string& label(VertexId v) const;
    Graph with_label(VertexId v, std::string text) const;

    // All edges as (u,v) pairs with u < v, ascending.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && labels_ == other.labels_;
    }

    // Full-scan check of symmetry, loop-freedom and simple-ness. Used by tests.
    void check_invariants() const;

private:
    friend Graph build_graph(int, const std::vector<std::pair<VertexId, VertexId>>&,
                             std::vector<std::string>);
    friend std::pair<Graph, VertexId> subdivide_edge(const Graph&, VertexId, VertexId,
                                                     const std::string&);
    friend Graph attach_identify(const Graph&, const Graph&, VertexId, VertexId,
                                 std::vector<VertexId>*);

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;
    long long edge_count_ = 0;
};

// Builds a graph from an edge list. Throws GraphError naming the offending
// pair on out-of-range ids, self-loops and duplicate edges. Labels are
// optional; when given they must have one entry per vertex.
Graph build_graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
                  std::vector<std::string> labels = {});

// Replaces edge uv by a path u-w-v through a fresh vertex w (the returned id).
// Throws GraphError if uv is not an edge.
std::pair<Graph, VertexId> subdivide_edge(const Graph& g, VertexId u, VertexId v,
                                          const std::string& label);

// Disjoint union of host and gadget with gadget_vertex merged into
// host_vertex. The remaining gadget vertices are appended after the host
// vertices in gadget-id order (skipping gadget_vertex); when gadget_map is
// non-null it receives that id mapping, indexed by gadget vertex.
Graph attach_identify(const Graph& host, const Graph& gadget, VertexId gadget_vertex,
                      VertexId host_vertex, std::vector<VertexId>* gadget_map = nullptr);

// Necessary condition for planarity: |E| <= 3|V|-6 (|E| <= |V|-1 when |V| < 3).
bool euler_planar_bound(const Graph& g);

// Degrees inside the induced subgraph G[S]; vertices outside S are absent.
std::map<VertexId, int> induced_degrees(const Graph& g, const std::vector<VertexId>& S);

}  // namespace akc
