#pragma once

#include <vector>

#include "sepcodes/graph.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/kinds.hpp"

namespace sepcodes {

struct DeltaEntry {
    Vertex u;
    Vertex v;
    VertexSet diff;
};

/// Symmetric differences over all pairs u < v, split by adjacency.
struct DeltaFamilies {
    std::vector<DeltaEntry> adj_open;       // N(u) △ N(v), uv ∈ E
    std::vector<DeltaEntry> nonadj_open;    // N(u) △ N(v), uv ∉ E
    std::vector<DeltaEntry> adj_closed;     // N[u] △ N[v], uv ∈ E
    std::vector<DeltaEntry> nonadj_closed;  // N[u] △ N[v], uv ∉ E
};

DeltaFamilies delta_families(const Graph& g);

/// Raw (unreduced) hypergraphs, one edge per pair and, for codes, one per vertex.
Hypergraph separation_hypergraph(const Graph& g, SeparationKind s);
Hypergraph domination_hypergraph(const Graph& g, DominationKind d);
Hypergraph code_hypergraph(const Graph& g, CodeKind x);

/// Direct definition checks (no hypergraphs involved).
bool is_s_set(const Graph& g, SeparationKind s, const VertexSet& c);
bool is_d_set(const Graph& g, DominationKind d, const VertexSet& c);
bool is_x_code(const Graph& g, CodeKind x, const VertexSet& c);

CoverResult s_number(const Graph& g, SeparationKind s, const CoverOptions& options = {});
CoverResult x_number(const Graph& g, CodeKind x, const CoverOptions& options = {});

inline constexpr std::size_t kBruteForceGraphGuard = 16;

/// Size-then-lex enumeration of vertex subsets using the definition checks.
/// Graphs above 16 vertices raise GuardError.
CoverResult s_number_bruteforce(const Graph& g, SeparationKind s);
CoverResult x_number_bruteforce(const Graph& g, CodeKind x);

}  // namespace sepcodes
