#include "sepcodes/separation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "sepcodes/errors.hpp"

namespace sepcodes {

DeltaFamilies delta_families(const Graph& g) {
    DeltaFamilies out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            auto open = g.neighbors(u) ^ g.neighbors(v);
            auto closed = closed_neighborhood(g, u) ^ closed_neighborhood(g, v);
            if (g.adjacent(u, v)) {
                out.adj_open.push_back({u, v, std::move(open)});
                out.adj_closed.push_back({u, v, std::move(closed)});
            } else {
                out.nonadj_open.push_back({u, v, std::move(open)});
                out.nonadj_closed.push_back({u, v, std::move(closed)});
            }
        }
    }
    return out;
}

namespace {

void append(Hypergraph& h, const std::vector<DeltaEntry>& family) {
    for (const auto& e : family) {
        h.add_edge(e.diff);
    }
}

}  // namespace

Hypergraph separation_hypergraph(const Graph& g, SeparationKind s) {
    const auto d = delta_families(g);
    Hypergraph h(g.order());
    switch (s) {
        case SeparationKind::L:
            append(h, d.adj_open);
            append(h, d.nonadj_closed);
            break;
        case SeparationKind::O:
            append(h, d.adj_open);
            append(h, d.nonadj_open);
            break;
        case SeparationKind::I:
            append(h, d.adj_closed);
            append(h, d.nonadj_closed);
            break;
        case SeparationKind::F:
            append(h, d.adj_closed);
            append(h, d.nonadj_open);
            break;
    }
    return h;
}

Hypergraph domination_hypergraph(const Graph& g, DominationKind d) {
    Hypergraph h(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        h.add_edge(d == DominationKind::D ? closed_neighborhood(g, v) : open_neighborhood(g, v));
    }
    return h;
}

Hypergraph code_hypergraph(const Graph& g, CodeKind x) {
    Hypergraph h(g.order());
    if (const auto s = separation_of(x)) {
        h = separation_hypergraph(g, *s);
    }
    const auto dom = domination_hypergraph(g, domination_of(x));
    for (const auto& e : dom.edges()) {
        h.add_edge(e);
    }
    return h;
}

namespace {

bool pairwise_distinct(std::vector<VertexSet> traces) {
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

void check_universe(const Graph& g, const VertexSet& c) {
    if (c.universe() != g.order()) {
        throw InputError("vertex set universe " + std::to_string(c.universe()) + " does not match graph order " +
                         std::to_string(g.order()));
    }
}

}  // namespace

bool is_s_set(const Graph& g, SeparationKind s, const VertexSet& c) {
    check_universe(g, c);
    const auto n = static_cast<Vertex>(g.order());
    std::vector<VertexSet> open;
    std::vector<VertexSet> closed;
    for (Vertex v = 0; v < n; ++v) {
        if (s == SeparationKind::L && c.contains(v)) {
            continue;
        }
        open.push_back(g.neighbors(v) & c);
        closed.push_back(closed_neighborhood(g, v) & c);
    }
    switch (s) {
        case SeparationKind::L:
        case SeparationKind::O: return pairwise_distinct(std::move(open));
        case SeparationKind::I: return pairwise_distinct(std::move(closed));
        case SeparationKind::F: return pairwise_distinct(std::move(open)) && pairwise_distinct(std::move(closed));
    }
    return false;
}

bool is_d_set(const Graph& g, DominationKind d, const VertexSet& c) {
    check_universe(g, c);
    for (Vertex v = 0; v < g.order(); ++v) {
        const bool hit = g.neighbors(v).intersects(c) || (d == DominationKind::D && c.contains(v));
        if (!hit) {
            return false;
        }
    }
    return true;
}

bool is_x_code(const Graph& g, CodeKind x, const VertexSet& c) {
    if (!is_d_set(g, domination_of(x), c)) {
        return false;
    }
    const auto s = separation_of(x);
    return !s || is_s_set(g, *s, c);
}

CoverResult s_number(const Graph& g, SeparationKind s, const CoverOptions& options) {
    return covering_number(separation_hypergraph(g, s), options);
}

CoverResult x_number(const Graph& g, CodeKind x, const CoverOptions& options) {
    return covering_number(code_hypergraph(g, x), options);
}

namespace {

// Definition checks on bitmasks, mirroring is_s_set / is_d_set for the brute-force oracle.
struct MaskGraph {
    std::vector<std::uint32_t> open;
    std::vector<std::uint32_t> closed;
};

MaskGraph to_masks(const Graph& g) {
    MaskGraph m;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::uint32_t mask = 0;
        g.neighbors(v).for_each([&](Vertex u) { mask |= std::uint32_t{1} << u; });
        m.open.push_back(mask);
        m.closed.push_back(mask | (std::uint32_t{1} << v));
    }
    return m;
}

bool distinct_traces(const std::vector<std::uint32_t>& nbhd, std::uint32_t c, std::uint32_t skip) {
    std::vector<std::uint32_t> traces;
    for (std::size_t v = 0; v < nbhd.size(); ++v) {
        if (((skip >> v) & 1U) == 0) {
            traces.push_back(nbhd[v] & c);
        }
    }
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

bool mask_separates(const MaskGraph& m, SeparationKind s, std::uint32_t c) {
    switch (s) {
        case SeparationKind::L: return distinct_traces(m.open, c, c);
        case SeparationKind::O: return distinct_traces(m.open, c, 0);
        case SeparationKind::I: return distinct_traces(m.closed, c, 0);
        case SeparationKind::F: return distinct_traces(m.open, c, 0) && distinct_traces(m.closed, c, 0);
    }
    return false;
}

bool mask_dominates(const MaskGraph& m, DominationKind d, std::uint32_t c) {
    const auto& nbhd = d == DominationKind::D ? m.closed : m.open;
    return std::all_of(nbhd.begin(), nbhd.end(), [&](std::uint32_t x) { return (x & c) != 0; });
}

CoverResult enumerate_subsets(std::size_t n, const std::function<bool(std::uint32_t)>& accept) {
    if (n > kBruteForceGraphGuard) {
        throw GuardError("brute-force refused: graph order " + std::to_string(n) + " > " +
                         std::to_string(kBruteForceGraphGuard));
    }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= n; ++k) {
        idx.resize(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            std::uint32_t c = 0;
            for (auto i : idx) {
                c |= std::uint32_t{1} << i;
            }
            if (accept(c)) {
                CoverResult r;
                r.feasible = true;
                r.tau = k;
                r.witness = VertexSet(n);
                for (auto i : idx) {
                    r.witness.insert(static_cast<Vertex>(i));
                }
                return r;
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return {};
}

}  // namespace

CoverResult s_number_bruteforce(const Graph& g, SeparationKind s) {
    const auto n = g.order();
    if (n > kBruteForceGraphGuard) {
        return enumerate_subsets(n, {});
    }
    const auto m = to_masks(g);
    return enumerate_subsets(n, [&](std::uint32_t c) { return mask_separates(m, s, c); });
}

CoverResult x_number_bruteforce(const Graph& g, CodeKind x) {
    const auto n = g.order();
    if (n > kBruteForceGraphGuard) {
        return enumerate_subsets(n, {});
    }
    const auto m = to_masks(g);
    const auto s = separation_of(x);
    const auto d = domination_of(x);
    return enumerate_subsets(n, [&](std::uint32_t c) {
        return mask_dominates(m, d, c) && (!s || mask_separates(m, *s, c));
    });
}

}  // namespace sepcodes
