#include "sepcodes/reductions.hpp"

#include <algorithm>
#include <functional>

#include "sepcodes/errors.hpp"
#include "sepcodes/separation.hpp"

namespace sepcodes {

namespace {

// b_j is vertex j-1 inside a gadget.
constexpr Vertex b(std::size_t j) { return static_cast<Vertex>(j - 1); }

std::size_t gadget_order(SeparationKind s) {
    switch (s) {
        case SeparationKind::I:
        case SeparationKind::O: return 6;
        case SeparationKind::F: return 16;
        case SeparationKind::L: return 4;
    }
    return 0;
}

}  // namespace

Gadget build_gadget(SeparationKind s) {
    switch (s) {
        case SeparationKind::I: {
            GraphBuilder gb(6);
            for (std::size_t j = 1; j < 6; ++j) {
                gb.add_edge(b(j), b(j + 1));
            }
            return {std::move(gb).build(), VertexSet(6, {b(3)})};
        }
        case SeparationKind::F: {
            GraphBuilder gb(16);
            gb.add_edge(b(14), b(1));
            for (std::size_t j = 1; j < 8; ++j) {
                gb.add_edge(b(j), b(j + 1));
            }
            gb.add_edge(b(8), b(15));
            gb.add_edge(b(4), b(9));
            gb.add_edge(b(9), b(10));
            gb.add_edge(b(10), b(13));
            gb.add_edge(b(5), b(11));
            gb.add_edge(b(11), b(12));
            gb.add_edge(b(12), b(16));
            return {std::move(gb).build(), VertexSet(16, {b(5)})};
        }
        case SeparationKind::L: {
            GraphBuilder gb(4);
            gb.add_edge(b(1), b(2));
            gb.add_edge(b(1), b(3));
            gb.add_edge(b(2), b(3));
            gb.add_edge(b(3), b(4));
            return {std::move(gb).build(), VertexSet(4, {b(1), b(2)})};
        }
        case SeparationKind::O: break;
    }
    throw InputError("no gadget for O; its construction is the complement of the I construction");
}

std::size_t reduction_target(SeparationKind s, const TestCoverInstance& inst) {
    const auto l = inst.budget;
    const auto t = inst.tests.size();
    switch (s) {
        case SeparationKind::I:
        case SeparationKind::O: return l + 4 * t + 3;
        case SeparationKind::F: return l + 12 * t + 11;
        case SeparationKind::L: return l + 2 * t + 2 * l + 3;
    }
    return 0;
}

std::size_t region_bound(SeparationKind s, const TestCoverInstance& inst) {
    const auto t = inst.tests.size();
    switch (s) {
        case SeparationKind::I:
        case SeparationKind::O: return 4 * t + 3;
        case SeparationKind::F: return 12 * t + 11;
        case SeparationKind::L: return 2 * t + 2 * inst.budget + 3;
    }
    return 0;
}

std::vector<std::string> ReductionArtifact::labels(std::size_t items) const {
    std::vector<std::string> out(graph.order());
    const bool layered = kind == SeparationKind::L;
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
        const auto copy = idx / items + 1;
        const auto item = idx % items;
        out[m[idx]] = layered ? "v^" + std::to_string(copy) + "(" + std::to_string(item) + ")"
                              : "v(" + std::to_string(item) + ")";
    }
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
        out[r[idx]] = "r^" + std::to_string(idx / 4 + 1) + "_" + std::to_string(idx % 4 + 1);
    }
    for (std::size_t t = 0; t < w.size(); ++t) {
        out[w[t]] = "w(" + std::to_string(t) + ")";
    }
    for (std::size_t t = 0; t < test_gadgets.size(); ++t) {
        for (std::size_t j = 0; j < test_gadgets[t].size(); ++j) {
            out[test_gadgets[t][j]] = "b" + std::to_string(j + 1) + "(T" + std::to_string(t) + ")";
        }
    }
    for (std::size_t j = 0; j < u_gadget.size(); ++j) {
        out[u_gadget[j]] = "b" + std::to_string(j + 1) + "(U)";
    }
    return out;
}

VertexSet ReductionArtifact::gadget_region() const {
    VertexSet out(graph.order());
    for (auto v : r) {
        out.insert(v);
    }
    for (const auto& block : test_gadgets) {
        for (auto v : block) {
            out.insert(v);
        }
    }
    for (auto v : u_gadget) {
        out.insert(v);
    }
    return out;
}

ReductionArtifact reduce(const TestCoverInstance& inst, SeparationKind s) {
    require_reducible(inst);
    const SeparationKind base = s == SeparationKind::O ? SeparationKind::I : s;
    const bool layered = base == SeparationKind::L;
    const auto gadget = build_gadget(base);
    const auto g_order = gadget_order(base);
    const auto items = inst.items;
    const auto tests = inst.tests.size();

    ReductionArtifact art;
    art.kind = s;
    art.copies = layered ? inst.budget + 1 : 1;
    art.k = reduction_target(s, inst);

    Vertex next = 0;
    for (std::size_t i = 0; i < art.copies * items; ++i) {
        art.m.push_back(next++);
    }
    if (layered) {
        for (std::size_t i = 0; i < 4 * art.copies; ++i) {
            art.r.push_back(next++);
        }
    }
    for (std::size_t t = 0; t < tests; ++t) {
        art.w.push_back(next++);
    }
    const auto add_block = [&] {
        std::vector<Vertex> block(g_order);
        for (auto& v : block) {
            v = next++;
        }
        return block;
    };
    for (std::size_t t = 0; t < tests; ++t) {
        art.test_gadgets.push_back(add_block());
    }
    art.u_gadget = add_block();

    GraphBuilder gb(next);
    const auto copy_gadget = [&](const std::vector<Vertex>& block) {
        for (const auto& [x, y] : gadget.graph.edges()) {
            gb.add_edge(block[x], block[y]);
        }
    };

    if (!layered) {
        for (std::size_t a = 0; a < items; ++a) {
            for (std::size_t c = a + 1; c < items; ++c) {
                gb.add_edge(art.m[a], art.m[c]);
            }
        }
    } else {
        for (std::size_t i = 1; i <= art.copies; ++i) {
            const auto r1 = art.r[4 * (i - 1)];
            gb.add_edge(r1, r1 + 1);
            gb.add_edge(r1 + 2, r1 + 3);
            for (std::size_t u = 0; u < items; ++u) {
                for (Vertex j = 0; j < 4; ++j) {
                    gb.add_edge(r1 + j, art.v(i, u, items));
                }
            }
        }
    }

    for (std::size_t t = 0; t < tests; ++t) {
        for (auto u : inst.tests[t]) {
            for (std::size_t i = 1; i <= art.copies; ++i) {
                gb.add_edge(art.w[t], art.v(i, u, items));
            }
        }
        copy_gadget(art.test_gadgets[t]);
        gadget.designated.for_each([&](Vertex d) { gb.add_edge(art.w[t], art.test_gadgets[t][d]); });
    }
    copy_gadget(art.u_gadget);
    gadget.designated.for_each([&](Vertex d) {
        for (auto v : art.m) {
            gb.add_edge(art.u_gadget[d], v);
        }
    });

    art.graph = std::move(gb).build();
    if (s == SeparationKind::O) {
        art.graph = complement(art.graph);
    }
    return art;
}

bool check_gadget_lower_bound(const ReductionArtifact& art, const TestCoverInstance& inst, const VertexSet& a) {
    if (!is_s_set(art.graph, art.kind, a)) {
        throw InputError("set is not an " + std::string(to_string(art.kind)) + "-set of the reduction graph");
    }
    return (a & art.gadget_region()).size() >= region_bound(art.kind, inst);
}

bool check_l_twin_structure(const ReductionArtifact& art, const TestCoverInstance& inst) {
    if (art.kind != SeparationKind::L) {
        throw InputError("twin structure check applies to the L construction");
    }
    const auto& g = art.graph;
    for (std::size_t i = 0; i < art.copies; ++i) {
        const auto r1 = art.r[4 * i];
        for (Vertex j : {Vertex{0}, Vertex{2}}) {
            const auto x = r1 + j;
            const auto y = r1 + j + 1;
            if (!g.adjacent(x, y) || closed_neighborhood(g, x) != closed_neighborhood(g, y)) {
                return false;
            }
        }
    }
    VertexSet r_set(g.order());
    for (auto v : art.r) {
        r_set.insert(v);
    }
    for (std::size_t u = 0; u < inst.items; ++u) {
        const auto first = g.neighbors(art.v(1, u, inst.items)) - r_set;
        for (std::size_t i = 2; i <= art.copies; ++i) {
            const auto x = art.v(i, u, inst.items);
            if (g.adjacent(art.v(1, u, inst.items), x) || (g.neighbors(x) - r_set) != first) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> padded_test_collection(const TestCoverInstance& inst) {
    const auto best = solve_test_cover(inst);
    std::vector<std::size_t> chosen;
    best.witness.for_each([&](Vertex t) { chosen.push_back(t); });
    const auto target = std::min(inst.budget, inst.tests.size());
    for (std::size_t t = 0; t < inst.tests.size() && chosen.size() < target; ++t) {
        if (!best.witness.contains(static_cast<Vertex>(t))) {
            chosen.push_back(t);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

using Layout = std::function<void(VertexSet&)>;

std::vector<Layout> forward_layouts(const ReductionArtifact& art, const std::vector<std::size_t>& chosen) {
    const auto put = [](VertexSet& a, const std::vector<Vertex>& block, std::initializer_list<std::size_t> js) {
        for (auto j : js) {
            a.insert(block[j - 1]);
        }
    };
    std::vector<Layout> layouts;
    switch (art.kind) {
        case SeparationKind::I:
        case SeparationKind::O: {
            const auto tests_part = [&, put](VertexSet& a) {
                for (const auto& block : art.test_gadgets) {
                    put(a, block, {2, 3, 4, 5});
                }
            };
            layouts.emplace_back([&, put, tests_part](VertexSet& a) {
                tests_part(a);
                put(a, art.u_gadget, {3, 4, 5});
            });
            layouts.emplace_back([&, put, tests_part](VertexSet& a) {
                tests_part(a);
                put(a, art.u_gadget, {2, 3, 4});
            });
            break;
        }
        case SeparationKind::F: {
            layouts.emplace_back([&, put](VertexSet& a) {
                for (const auto& block : art.test_gadgets) {
                    put(a, block, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
                }
                put(a, art.u_gadget, {1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12});
            });
            break;
        }
        case SeparationKind::L: {
            const auto r_part = [&](VertexSet& a) {
                for (std::size_t i = 0; i < art.copies; ++i) {
                    a.insert(art.r[4 * i]);
                    a.insert(art.r[4 * i + 2]);
                }
            };
            layouts.emplace_back([&, put, r_part](VertexSet& a) {
                r_part(a);
                put(a, art.u_gadget, {1});
                for (const auto& block : art.test_gadgets) {
                    put(a, block, {1, 3});
                }
            });
            if (!chosen.empty()) {
                const auto pivot = chosen.front();
                layouts.emplace_back([&, put, r_part, pivot](VertexSet& a) {
                    r_part(a);
                    put(a, art.u_gadget, {1, 3});
                    for (std::size_t t = 0; t < art.test_gadgets.size(); ++t) {
                        if (t == pivot) {
                            put(a, art.test_gadgets[t], {1});
                        } else {
                            put(a, art.test_gadgets[t], {1, 3});
                        }
                    }
                });
            }
            break;
        }
    }
    return layouts;
}

}  // namespace

ForwardWitness forward_witness(const ReductionArtifact& art, const TestCoverInstance& inst,
                               const std::vector<std::size_t>& chosen) {
    for (auto t : chosen) {
        if (t >= inst.tests.size()) {
            throw InputError("chosen test index out of range");
        }
    }
    ForwardWitness out;
    out.chosen_tests = chosen;
    const auto layouts = forward_layouts(art, chosen);
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        VertexSet a(art.graph.order());
        for (auto t : chosen) {
            a.insert(art.w[t]);
        }
        layouts[i](a);
        const bool valid = is_s_set(art.graph, art.kind, a);
        if (i == 0 || valid) {
            out.set = std::move(a);
            out.published_layout = i == 0;
            out.valid = valid;
        }
        if (valid) {
            break;
        }
    }
    // Fewer tests than the budget: top up to k with the lowest unused vertices.
    if (out.valid && chosen.size() < inst.budget) {
        for (Vertex v = 0; v < art.graph.order() && out.set.size() < art.k; ++v) {
            if (!out.set.contains(v)) {
                out.set.insert(v);
                ++out.padding;
            }
        }
    }
    return out;
}

IffResult verify_reduction_iff(const TestCoverInstance& inst, SeparationKind s, const IffOptions& options) {
    require_reducible(inst);
    if (s == SeparationKind::F && !options.deep) {
        throw GuardError("F iff verification is gated behind the deep option");
    }
    const auto art = reduce(inst, s);
    if (art.graph.order() > options.max_vertices) {
        throw GuardError("reduction graph has " + std::to_string(art.graph.order()) +
                         " vertices, above the iff guard of " + std::to_string(options.max_vertices));
    }
    IffResult out;
    out.kind = s;
    out.vertices = art.graph.order();
    out.k = art.k;
    out.test_cover = solve_test_cover(inst);
    out.test_cover_yes = out.test_cover.tau <= inst.budget;
    out.graph = s_number(art.graph, s, CoverOptions{.canonical_witness = false});
    out.graph_yes = out.graph.feasible && out.graph.tau <= art.k;
    out.agree = out.test_cover_yes == out.graph_yes;
    out.region_ok = out.graph.feasible && check_gadget_lower_bound(art, inst, out.graph.witness);
    return out;
}

}  // namespace sepcodes
