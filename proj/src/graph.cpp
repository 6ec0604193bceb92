#include "sepcodes/graph.hpp"

#include <string>

#include "sepcodes/errors.hpp"

namespace sepcodes {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(g.order()));
    }
}

}  // namespace

Graph::Graph(std::size_t n) {
    if (n == 0) {
        throw InputError("a graph needs at least one vertex");
    }
    adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) {
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    return adj_[u].contains(v);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(*this, v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        adj_[u].for_each([&](Vertex v) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        });
    }
    return out;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_vertex(graph_, u);
    check_vertex(graph_, v);
    if (u == v) {
        throw InputError("self-loop at vertex " + std::to_string(u));
    }
    if (graph_.adj_[u].contains(v)) {
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    graph_.adj_[u].insert(v);
    graph_.adj_[v].insert(u);
    ++graph_.edge_count_;
    return *this;
}

GraphBuilder& GraphBuilder::ensure_edge(Vertex u, Vertex v) {
    if (!graph_.adjacent(u, v)) {
        add_edge(u, v);
    }
    return *this;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

}  // namespace sepcodes
