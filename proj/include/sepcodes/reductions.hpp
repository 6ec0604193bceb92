#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcodes/graph.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/kinds.hpp"
#include "sepcodes/test_cover.hpp"

namespace sepcodes {

/// Gadget graph with vertices b1..bm mapped to 0..m-1.
struct Gadget {
    Graph graph;
    VertexSet designated;
};

/// I: path b1..b6, designated {b3}.
/// F: path b14-b1-...-b8-b15 with branches b4-b9-b10-b13 and b5-b11-b12-b16, designated {b5}.
/// L: triangle b1 b2 b3 plus pendant b3-b4, designated {b1, b2}.
/// Throws InputError for O.
Gadget build_gadget(SeparationKind s);

/// Vertex layout: M, then R, then W, then one gadget block per test (input order),
/// then the gadget of U. For L, M is grouped by copy: v^i(u) = (i-1)|U| + u, and
/// R holds r^i_1..r^i_4 consecutively for each copy i.
struct ReductionArtifact {
    SeparationKind kind = SeparationKind::I;
    Graph graph{1};
    std::size_t k = 0;
    std::size_t copies = 1;                         // r
    std::vector<Vertex> m;                          // v^i(u)
    std::vector<Vertex> r;                          // r^i_j
    std::vector<Vertex> w;                          // w(T)
    std::vector<std::vector<Vertex>> test_gadgets;  // [test][j-1] -> b_j(T)
    std::vector<Vertex> u_gadget;                   // [j-1] -> b_j(U)

    Vertex v(std::size_t copy, std::size_t item, std::size_t items) const { return m[(copy - 1) * items + item]; }
    /// Human-readable name per vertex, e.g. "v^2(1)", "r^1_3", "w(0)", "b5(T1)", "b3(U)".
    std::vector<std::string> labels(std::size_t items) const;
    /// Gadget vertices, plus R for L.
    VertexSet gadget_region() const;
};

/// k = l + p|T| + q with (p, q) = (4, 3) for I and O, (12, 11) for F, (2, 2l + 3) for L.
std::size_t reduction_target(SeparationKind s, const TestCoverInstance& inst);
/// Lower bound on |A ∩ gadget_region| for any S-set A.
std::size_t region_bound(SeparationKind s, const TestCoverInstance& inst);

/// O yields the complement of the I construction with the same layout and k.
ReductionArtifact reduce(const TestCoverInstance& inst, SeparationKind s);

/// Throws InputError when `a` is not an S-set of the artifact's graph.
bool check_gadget_lower_bound(const ReductionArtifact& art, const TestCoverInstance& inst, const VertexSet& a);

/// Closed-twin pairs in R and copies of each item agreeing outside R.
bool check_l_twin_structure(const ReductionArtifact& art, const TestCoverInstance& inst);

struct ForwardWitness {
    std::vector<std::size_t> chosen_tests;
    VertexSet set;
    bool published_layout = true;  // false when the fallback layout was needed
    bool valid = false;            // passes is_s_set
    std::size_t padding = 0;       // extra vertices added when |chosen| < budget
};

/// Builds the explicit S-set from a test collection `chosen` (indices into inst.tests).
/// Tries the published layout first and a fallback layout if that is not an S-set.
ForwardWitness forward_witness(const ReductionArtifact& art, const TestCoverInstance& inst,
                               const std::vector<std::size_t>& chosen);

/// Minimum test collection padded in input order up to min(l, |T|) tests.
std::vector<std::size_t> padded_test_collection(const TestCoverInstance& inst);

struct IffOptions {
    bool deep = false;             // required for F
    std::size_t max_vertices = 64; // refuse larger reduction graphs
};

struct IffResult {
    SeparationKind kind = SeparationKind::I;
    std::size_t vertices = 0;
    std::size_t k = 0;
    CoverResult test_cover;
    bool test_cover_yes = false;
    CoverResult graph;
    bool graph_yes = false;
    bool agree = false;
    bool region_ok = false;
};

/// Throws GuardError naming the guard when the instance is too large or F lacks `deep`.
IffResult verify_reduction_iff(const TestCoverInstance& inst, SeparationKind s, const IffOptions& options = {});

}  // namespace sepcodes
