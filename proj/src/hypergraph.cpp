#include "sepcodes/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "sepcodes/errors.hpp"

namespace sepcodes {

Hypergraph::Hypergraph(std::size_t universe, std::vector<VertexSet> edges) : universe_(universe) {
    edges_.reserve(edges.size());
    for (auto& e : edges) {
        add_edge(std::move(e));
    }
}

void Hypergraph::add_edge(VertexSet edge) {
    if (edge.universe() != universe_) {
        throw InputError("hyperedge universe " + std::to_string(edge.universe()) + " does not match " +
                         std::to_string(universe_));
    }
    edges_.push_back(std::move(edge));
}

bool Hypergraph::has_empty_edge() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
}

std::vector<VertexSet> Hypergraph::sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cover(const Hypergraph& h, const VertexSet& c) {
    if (c.universe() != h.universe()) {
        throw InputError("cover universe does not match hypergraph");
    }
    return std::all_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return e.intersects(c); });
}

Hypergraph reduce_to_clutter(const Hypergraph& h) {
    auto edges = h.edges();
    std::sort(edges.begin(), edges.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<VertexSet> kept;
    for (auto& e : edges) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(e); });
        if (!redundant) {
            kept.push_back(std::move(e));
        }
    }
    std::sort(kept.begin(), kept.end());
    return Hypergraph(h.universe(), std::move(kept));
}

namespace {

template <std::size_t W>
class Engine {
public:
    using Bits = std::array<std::uint64_t, W>;

    Engine(std::size_t universe, const std::vector<VertexSet>& edges) : universe_(universe) {
        root_.reserve(edges.size());
        for (const auto& e : edges) {
            root_.push_back(to_bits(e));
        }
        std::stable_sort(root_.begin(), root_.end(), [](const Bits& a, const Bits& b) { return count(a) < count(b); });
    }

    // Minimum cover size and one witness; precondition: no empty edge.
    std::pair<std::size_t, VertexSet> optimize() {
        Bits greedy = greedy_cover(root_);
        best_count_ = count(greedy);
        best_ = greedy;
        decision_ = false;
        search(root_, Bits{}, 0, 0);
        return {best_count_, from_bits(best_)};
    }

    // Is there a cover of size <= budget containing `include` and disjoint from `exclude`?
    bool exists(const VertexSet& include, const VertexSet& exclude, std::size_t budget) {
        const Bits inc = to_bits(include);
        const Bits exc = to_bits(exclude);
        const std::size_t base = count(inc);
        if (base > budget) {
            return false;
        }
        std::vector<Bits> live;
        for (const auto& e : root_) {
            if (intersects(e, inc)) {
                continue;
            }
            Bits f = minus(e, exc);
            if (is_zero(f)) {
                return false;
            }
            live.push_back(f);
        }
        decision_ = true;
        found_ = false;
        best_count_ = budget + 1;
        search(live, inc, base, 0);
        return found_;
    }

private:
    static std::size_t count(const Bits& b) {
        std::size_t c = 0;
        for (auto w : b) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    static bool intersects(const Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < W; ++i) {
            if ((a[i] & b[i]) != 0) {
                return true;
            }
        }
        return false;
    }
    static bool is_zero(const Bits& a) {
        for (auto w : a) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    static Bits minus(Bits a, const Bits& b) {
        for (std::size_t i = 0; i < W; ++i) {
            a[i] &= ~b[i];
        }
        return a;
    }
    static void set(Bits& a, std::size_t v) { a[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static bool test(const Bits& a, std::size_t v) { return ((a[v >> 6] >> (v & 63)) & 1U) != 0; }

    Bits to_bits(const VertexSet& s) const {
        Bits b{};
        s.for_each([&](Vertex v) { set(b, v); });
        return b;
    }
    VertexSet from_bits(const Bits& b) const {
        VertexSet s(universe_);
        for (std::size_t v = 0; v < universe_; ++v) {
            if (test(b, v)) {
                s.insert(static_cast<Vertex>(v));
            }
        }
        return s;
    }

    Bits greedy_cover(std::vector<Bits> live) const {
        Bits chosen{};
        std::vector<std::size_t> hits(universe_);
        while (!live.empty()) {
            std::fill(hits.begin(), hits.end(), 0);
            for (const auto& e : live) {
                for_each_bit(e, [&](std::size_t v) { ++hits[v]; });
            }
            const auto pick = static_cast<std::size_t>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            set(chosen, pick);
            std::erase_if(live, [&](const Bits& e) { return test(e, pick); });
        }
        return chosen;
    }

    template <class F>
    static void for_each_bit(const Bits& b, F&& f) {
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t bits = b[w];
            while (bits != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    // Greedy packing of pairwise disjoint edges; each needs its own cover vertex.
    static std::size_t packing_bound(const std::vector<Bits>& live) {
        Bits used{};
        std::size_t packed = 0;
        for (const auto& e : live) {
            if (!intersects(e, used)) {
                ++packed;
                for (std::size_t i = 0; i < W; ++i) {
                    used[i] |= e[i];
                }
            }
        }
        return packed;
    }

    std::vector<Bits>& buffer(std::size_t depth) {
        if (pool_.size() <= depth) {
            pool_.resize(depth + 1);
        }
        return pool_[depth];
    }

    void search(const std::vector<Bits>& live, const Bits& chosen, std::size_t chosen_count, std::size_t depth) {
        if (decision_ && found_) {
            return;
        }
        if (live.empty()) {
            if (chosen_count < best_count_ || decision_) {
                best_count_ = chosen_count;
                best_ = chosen;
                found_ = true;
            }
            return;
        }
        if (chosen_count + packing_bound(live) >= best_count_) {
            return;
        }

        std::size_t pivot = 0;
        std::size_t pivot_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < live.size(); ++i) {
            const auto c = count(live[i]);
            if (c < pivot_size) {
                pivot_size = c;
                pivot = i;
                if (c == 1) {
                    break;
                }
            }
        }
        const Bits edge = live[pivot];

        Bits excluded{};
        std::vector<std::size_t> branch_vertices;
        for_each_bit(edge, [&](std::size_t v) { branch_vertices.push_back(v); });

        for (const auto v : branch_vertices) {
            if (chosen_count + 1 >= best_count_) {
                return;
            }
            auto& next = buffer(depth);
            next.clear();
            bool dead = false;
            for (const auto& e : live) {
                if (test(e, v)) {
                    continue;
                }
                Bits f = minus(e, excluded);
                if (is_zero(f)) {
                    dead = true;
                    break;
                }
                next.push_back(f);
            }
            if (!dead) {
                Bits with = chosen;
                set(with, v);
                // The buffer for this depth is reused by siblings; recurse on a moved copy.
                std::vector<Bits> owned;
                owned.swap(next);
                search(owned, with, chosen_count + 1, depth + 1);
                owned.swap(buffer(depth));
                if (decision_ && found_) {
                    return;
                }
            }
            set(excluded, v);
        }
    }

    std::size_t universe_;
    std::vector<Bits> root_;
    std::vector<std::vector<Bits>> pool_;
    Bits best_{};
    std::size_t best_count_ = 0;
    bool decision_ = false;
    bool found_ = false;
};

template <class Fn>
decltype(auto) dispatch(std::size_t universe, Fn&& fn) {
    if (universe <= 64) {
        return fn(std::integral_constant<std::size_t, 1>{});
    }
    if (universe <= 128) {
        return fn(std::integral_constant<std::size_t, 2>{});
    }
    if (universe <= 256) {
        return fn(std::integral_constant<std::size_t, 4>{});
    }
    if (universe <= kMaxSolverUniverse) {
        return fn(std::integral_constant<std::size_t, 8>{});
    }
    throw GuardError("universe of " + std::to_string(universe) + " exceeds the solver limit of " +
                     std::to_string(kMaxSolverUniverse));
}

// Lexicographically smallest cover of size tau: fix vertices greedily from 0 upward.
VertexSet canonical_witness(const Hypergraph& clutter, std::size_t tau) {
    const auto n = clutter.universe();
    VertexSet include(n);
    VertexSet exclude(n);
    std::size_t included = 0;
    return dispatch(n, [&](auto w) {
        Engine<decltype(w)::value> engine(n, clutter.edges());
        for (Vertex v = 0; v < n && included < tau; ++v) {
            const bool useful = std::any_of(clutter.edges().begin(), clutter.edges().end(), [&](const VertexSet& e) {
                return e.contains(v) && !e.intersects(include);
            });
            if (useful) {
                include.insert(v);
                if (engine.exists(include, exclude, tau)) {
                    ++included;
                    continue;
                }
                include.erase(v);
            }
            exclude.insert(v);
        }
        return include;
    });
}

}  // namespace

bool cover_exists(const Hypergraph& h, const VertexSet& include, const VertexSet& exclude, std::size_t budget) {
    if (include.universe() != h.universe() || exclude.universe() != h.universe()) {
        throw InputError("cover_exists: universe mismatch");
    }
    if (include.intersects(exclude)) {
        return false;
    }
    if (h.has_empty_edge()) {
        return false;
    }
    const auto clutter = reduce_to_clutter(h);
    return dispatch(h.universe(), [&](auto w) {
        Engine<decltype(w)::value> engine(h.universe(), clutter.edges());
        return engine.exists(include, exclude, budget);
    });
}

CoverResult covering_number(const Hypergraph& h, const CoverOptions& options) {
    CoverResult result;
    if (h.has_empty_edge()) {
        return result;
    }
    const Hypergraph work = options.use_clutter ? reduce_to_clutter(h) : h;
    result.feasible = true;
    auto [tau, witness] = dispatch(work.universe(), [&](auto w) {
        Engine<decltype(w)::value> engine(work.universe(), work.edges());
        return engine.optimize();
    });
    result.tau = tau;
    result.witness = options.canonical_witness ? canonical_witness(work, tau) : std::move(witness);
    return result;
}

CoverResult covering_number_bruteforce(const Hypergraph& h) {
    const auto n = h.universe();
    if (n > kBruteForceCoverGuard) {
        throw GuardError("brute-force cover refused: universe " + std::to_string(n) + " > " +
                         std::to_string(kBruteForceCoverGuard));
    }
    std::vector<std::uint32_t> masks;
    masks.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        e.for_each([&](Vertex v) { m |= std::uint32_t{1} << v; });
        masks.push_back(m);
    }
    const auto covers = [&](std::uint32_t c) {
        return std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & c) != 0; });
    };

    CoverResult result;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= n; ++k) {
        idx.resize(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            std::uint32_t c = 0;
            for (auto i : idx) {
                c |= std::uint32_t{1} << i;
            }
            if (covers(c)) {
                result.feasible = true;
                result.tau = k;
                result.witness = VertexSet(n);
                for (auto i : idx) {
                    result.witness.insert(static_cast<Vertex>(i));
                }
                return result;
            }
            // Next k-combination of {0..n-1} in lexicographic order.
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
    return result;
}

Hypergraph complete_rose(std::size_t n, std::size_t q) {
    if (q < 2 || q >= n) {
        throw InputError("complete rose needs 2 <= q < n");
    }
    Hypergraph h(n);
    std::vector<Vertex> idx(q);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    while (true) {
        h.add_edge(VertexSet::from_members(n, idx));
        std::size_t i = q;
        while (i > 0 && idx[i - 1] == n - q + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < q; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.universe() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.sorted_edges()) {
        bool first = true;
        e.for_each([&](Vertex v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
}

std::string hypergraph_to_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

}  // namespace sepcodes
