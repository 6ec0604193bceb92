#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcodes/admissibility.hpp"
#include "sepcodes/graph.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/kinds.hpp"

namespace sepcodes {

// Augmentations. Each throws InputError when `c` is not an S-set of g.

/// Adds the (unique) vertex v0 with N[v0] ∩ c = ∅, if any.
VertexSet augment_to_sd_code(const Graph& g, SeparationKind s, const VertexSet& c);

/// s ∈ {O, F}. Adds the lowest neighbour of the vertex v0 with N(v0) ∩ c = ∅, if any.
/// Throws InputError on isolated vertices or other kinds.
VertexSet augment_to_std_code_of(const Graph& g, SeparationKind s, const VertexSet& c);

/// s ∈ {L, I}. For members of c without a neighbour in c, adds outside neighbours
/// greedily (most such members covered, then lowest index); then one neighbour of an
/// outside vertex still missed by the enlarged set. Result has size <= 2|c|.
VertexSet augment_to_std_code_li(const Graph& g, SeparationKind s, const VertexSet& c);

/// All 14 numbers of one graph.
struct GraphNumbers {
    std::array<CoverResult, 4> separation;  // indexed by SeparationKind
    std::array<CoverResult, 10> code;       // indexed by CodeKind

    const CoverResult& of(SeparationKind s) const { return separation[static_cast<std::size_t>(s)]; }
    const CoverResult& of(CodeKind x) const { return code[static_cast<std::size_t>(x)]; }
};

GraphNumbers compute_numbers(const Graph& g, const CoverOptions& options = {});

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s) noexcept;

struct Quantity {
    std::string name;  // e.g. "LD", "co:I" for the complement
    CoverResult value;
};

struct Clause {
    std::string statement;
    Status status = Status::Skip;
};

struct TheoremReport {
    std::string id;
    std::size_t order = 0;
    std::vector<Edge> edges;
    std::vector<Quantity> quantities;
    std::vector<Clause> clauses;
    Status verdict = Status::Skip;
};

/// Ids accepted by run_theorem and the CLI.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);

struct TheoremContext {
    const Graph& g;
    const GraphNumbers& numbers;
    const AdmissibilityReport& twins;
    // Only needed by "7" and "cor2".
    const Graph* complement = nullptr;
    const GraphNumbers* complement_numbers = nullptr;
};

/// "3": SD <= S+1 (plus the L-set undominated-outsider bound); "4": STD <= S+1 for O,F;
/// "5": STD <= 2S for L,I; "od-fd": |OD-OTD|, |FD-FTD| <= 1.
TheoremReport check_bound_theorems(const TheoremContext& ctx, std::string_view id);
/// "7": number equalities and clutter identities between g and its complement.
TheoremReport check_complement_duality(const TheoremContext& ctx);
/// "cor2": gaps of at most one between g and its complement.
TheoremReport check_gap_corollary(const TheoremContext& ctx);
/// "eq1", "eq2", "eq4", "fig2".
TheoremReport check_order(const TheoremContext& ctx, std::string_view id);

TheoremReport run_theorem(const TheoremContext& ctx, std::string_view id);

/// Convenience wrappers computing everything from scratch.
TheoremReport check_complement_duality(const Graph& g);
TheoremReport check_gap_corollary(const Graph& g);
TheoremReport check_bound_theorems(const Graph& g);

/// The 12 arrows of the X-number order as (smaller, larger).
const std::vector<std::pair<CodeKind, CodeKind>>& figure_order_arrows();

struct SpiderEntry {
    bool thick = false;
    std::string kind;  // "L".."F" or a code name
    std::size_t expected = 0;
};

/// Published closed forms for thin and thick headless spiders, k >= 4.
std::vector<SpiderEntry> spider_closed_forms(std::size_t k);

struct SpiderCheck {
    SpiderEntry entry;
    CoverResult computed;
    bool match = false;
};

std::vector<SpiderCheck> check_spiders(std::size_t k);

}  // namespace sepcodes
