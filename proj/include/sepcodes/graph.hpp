#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sepcodes/vertex_set.hpp"

namespace sepcodes {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with at least one vertex.
///
/// Immutable once built; use GraphBuilder or Graph::from_edges to construct.
class Graph {
public:
    /// Edgeless graph on `n` vertices.
    explicit Graph(std::size_t n);

    /// Throws InputError on out-of-range endpoints, self-loops or duplicate edges.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;

    /// N(v). Throws InputError when v is out of range.
    const VertexSet& neighbors(Vertex v) const;

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : graph_(n) {}

    /// Adds uv; throws InputError on self-loops, duplicates or bad endpoints.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    /// Adds uv unless already present.
    GraphBuilder& ensure_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
    std::size_t order() const noexcept { return graph_.order(); }

    Graph build() && { return std::move(graph_); }

private:
    Graph graph_;
};

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Complement on the same vertex set: u~v iff u != v and uv not an edge of g.
Graph complement(const Graph& g);

}  // namespace sepcodes
