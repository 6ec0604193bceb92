#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepcodes/vertex_set.hpp"

namespace sepcodes {

/// Hypergraph over the universe {0..n-1}. Raw form may repeat edges.
class Hypergraph {
public:
    explicit Hypergraph(std::size_t universe) : universe_(universe) {}
    Hypergraph(std::size_t universe, std::vector<VertexSet> edges);

    std::size_t universe() const noexcept { return universe_; }
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Throws InputError if the edge lives over a different universe.
    void add_edge(VertexSet edge);

    bool has_empty_edge() const noexcept;

    /// Edges sorted lexicographically (duplicates kept).
    std::vector<VertexSet> sorted_edges() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t universe_;
    std::vector<VertexSet> edges_;
};

struct CoverResult {
    bool feasible = false;
    std::size_t tau = 0;
    VertexSet witness;

    friend bool operator==(const CoverResult&, const CoverResult&) = default;
};

struct CoverOptions {
    /// Return the minimum cover with the lexicographically smallest sorted member list.
    /// When false, any minimum cover is returned (still deterministic).
    bool canonical_witness = true;
    /// Solve on reduce_to_clutter(h) instead of h itself.
    bool use_clutter = true;
};

bool is_cover(const Hypergraph& h, const VertexSet& c);

/// Inclusion-minimal edges, deduplicated, sorted lexicographically.
Hypergraph reduce_to_clutter(const Hypergraph& h);

/// Exact branch and bound. Universes above kMaxSolverUniverse raise GuardError.
CoverResult covering_number(const Hypergraph& h, const CoverOptions& options = {});

/// Does a cover of size <= budget exist that contains `include` and avoids `exclude`?
bool cover_exists(const Hypergraph& h, const VertexSet& include, const VertexSet& exclude, std::size_t budget);

inline constexpr std::size_t kMaxSolverUniverse = 512;
inline constexpr std::size_t kBruteForceCoverGuard = 24;

/// Subset enumeration in size-then-lex order. Universe > 24 raises GuardError.
CoverResult covering_number_bruteforce(const Hypergraph& h);

/// All q-subsets of {0..n-1}; requires 2 <= q < n.
Hypergraph complete_rose(std::size_t n, std::size_t q);

/// "n e" header, then one line per edge (space-separated ids), edges sorted.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string hypergraph_to_string(const Hypergraph& h);

}  // namespace sepcodes
