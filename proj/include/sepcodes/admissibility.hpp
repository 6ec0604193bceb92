#pragma once

#include <optional>
#include <vector>

#include "sepcodes/graph.hpp"
#include "sepcodes/kinds.hpp"

namespace sepcodes {

struct AdmissibilityReport {
    std::optional<Vertex> isolated;    // lowest isolated vertex, if any
    std::vector<Edge> open_twins;      // non-adjacent, N(u) = N(v), u < v, sorted
    std::vector<Edge> closed_twins;    // adjacent, N[u] = N[v], u < v, sorted

    bool has_isolated() const noexcept { return isolated.has_value(); }
    bool admissible(SeparationKind s) const noexcept;
    bool admissible(DominationKind d) const noexcept;
    bool admissible(CodeKind x) const noexcept;
};

/// Exhaustive pairwise scan.
AdmissibilityReport detect_twins(const Graph& g);

}  // namespace sepcodes
