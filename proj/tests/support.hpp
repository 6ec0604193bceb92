#pragma once

#include <random>
#include <vector>

#include "sepcodes/graph.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/vertex_set.hpp"

namespace sepcodes::testing {

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

inline Graph house() { return Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}); }

inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t edges) {
    Hypergraph h(n);
    for (std::size_t e = 0; e < edges; ++e) {
        VertexSet s(n);
        const auto width = 1 + rng() % 4;
        for (std::size_t i = 0; i < width; ++i) {
            s.insert(static_cast<Vertex>(rng() % n));
        }
        h.add_edge(std::move(s));
    }
    return h;
}

}  // namespace sepcodes::testing
