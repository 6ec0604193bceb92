#include "sepcodes/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sepcodes/errors.hpp"

namespace sepcodes {

std::vector<Graph> all_labeled_graphs(std::size_t n) {
    if (n == 0 || n > 6) {
        throw GuardError("labeled enumeration supports 1 <= n <= 6");
    }
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        GraphBuilder gb(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                gb.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        out.push_back(std::move(gb).build());
    }
    return out;
}

namespace {

// Colour refinement with colours ranked by signature, so the final ordered partition
// depends only on the isomorphism class.
std::vector<std::size_t> refine(const Graph& g) {
    const auto n = g.order();
    std::vector<std::size_t> color(n);
    for (Vertex v = 0; v < n; ++v) {
        color[v] = g.degree(v);
    }
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = color[v];
            g.neighbors(v).for_each([&](Vertex u) { sig[v].second.push_back(color[u]); });
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Vertex v = 0; v < n; ++v) {
            color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                                distinct.begin());
        }
        if (distinct.size() == classes) {
            return color;
        }
        classes = distinct.size();
    }
}

using Code = std::vector<bool>;

Code adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
    const auto n = order.size();
    Code code;
    code.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            code.push_back(g.adjacent(order[i], order[j]));
        }
    }
    return code;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    const auto n = g.order();
    const auto color = refine(g);
    // order[pos] = vertex; cells are the colour classes in colour order.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && color[order[j]] == color[order[i]]) {
            ++j;
        }
        cells.emplace_back(i, j);
        i = j;
    }

    Code best;
    std::vector<Vertex> best_order;
    // Enumerate the product of permutations within cells.
    std::function<void(std::size_t)> walk = [&](std::size_t cell) {
        if (cell == cells.size()) {
            auto code = adjacency_code(g, order);
            if (best_order.empty() || code > best) {
                best = std::move(code);
                best_order = order;
            }
            return;
        }
        const auto [lo, hi] = cells[cell];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            walk(cell + 1);
        } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                       order.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    walk(0);

    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[best_order[i]] = static_cast<Vertex>(i);
    }
    GraphBuilder gb(n);
    for (const auto& [u, v] : g.edges()) {
        gb.add_edge(position[u], position[v]);
    }
    return std::move(gb).build();
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
    if (n == 0 || n > 8) {
        throw GuardError("isomorphism-class enumeration supports 1 <= n <= 8");
    }
    std::vector<Graph> level{Graph(1)};
    for (std::size_t order = 2; order <= n; ++order) {
        std::map<std::vector<Edge>, Graph> seen;
        for (const auto& h : level) {
            const auto base_edges = h.edges();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (order - 1)); ++mask) {
                GraphBuilder gb(order);
                for (const auto& [u, v] : base_edges) {
                    gb.add_edge(u, v);
                }
                for (Vertex u = 0; u + 1 < order; ++u) {
                    if ((mask >> u) & 1U) {
                        gb.add_edge(u, static_cast<Vertex>(order - 1));
                    }
                }
                auto canon = canonical_form(std::move(gb).build());
                auto key = canon.edges();
                seen.emplace(std::move(key), std::move(canon));
            }
        }
        level.clear();
        for (auto& [key, graph] : seen) {
            level.push_back(std::move(graph));
        }
    }
    return level;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    if (min_n == 0 || min_n > max_n) {
        throw InputError("random_graphs needs 1 <= min_n <= max_n");
    }
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
        const auto density = 10 + rng() % 81;  // percent
        GraphBuilder gb(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng() % 100 < density) {
                    gb.add_edge(u, v);
                }
            }
        }
        out.push_back(std::move(gb).build());
    }
    return out;
}

}  // namespace sepcodes
