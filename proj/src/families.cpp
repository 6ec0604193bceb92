#include "sepcodes/families.hpp"

#include <array>
#include <utility>

#include "sepcodes/errors.hpp"

namespace sepcodes {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Clique, "clique"},
    {Family::Star, "star"},
    {Family::ThinSpider, "thin_spider"},
    {Family::ThickSpider, "thick_spider"},
    {Family::Empty, "empty"},
}};

void require(bool ok, const char* what) {
    if (!ok) {
        throw InputError(what);
    }
}

}  // namespace

Graph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        b.add_edge(v, v + 1);
    }
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        b.add_edge(v, v + 1);
    }
    b.add_edge(0, static_cast<Vertex>(n - 1));
    return std::move(b).build();
}

Graph clique_graph(std::size_t n) {
    require(n >= 1, "clique needs n >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph star_graph(std::size_t leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) {
        b.add_edge(0, v);
    }
    return std::move(b).build();
}

Graph thin_spider(std::size_t k) {
    require(k >= 2, "spiders need k >= 2");
    const auto kk = static_cast<Vertex>(k);
    GraphBuilder b(2 * k);
    for (Vertex i = 0; i < kk; ++i) {
        for (Vertex j = i + 1; j < kk; ++j) {
            b.add_edge(i, j);
        }
        b.add_edge(i, kk + i);
    }
    return std::move(b).build();
}

Graph thick_spider(std::size_t k) {
    require(k >= 2, "spiders need k >= 2");
    const auto kk = static_cast<Vertex>(k);
    GraphBuilder b(2 * k);
    for (Vertex i = 0; i < kk; ++i) {
        for (Vertex j = i + 1; j < kk; ++j) {
            b.add_edge(kk + i, kk + j);
        }
        for (Vertex j = 0; j < kk; ++j) {
            if (i != j) {
                b.add_edge(i, kk + j);
            }
        }
    }
    return std::move(b).build();
}

Graph empty_graph(std::size_t n) {
    require(n >= 1, "empty graph needs n >= 1");
    return Graph(n);
}

Graph make_family(Family family, std::size_t param) {
    switch (family) {
        case Family::Path: return path_graph(param);
        case Family::Cycle: return cycle_graph(param);
        case Family::Clique: return clique_graph(param);
        case Family::Star: return star_graph(param);
        case Family::ThinSpider: return thin_spider(param);
        case Family::ThickSpider: return thick_spider(param);
        case Family::Empty: return empty_graph(param);
    }
    throw InputError("unknown family");
}

Family parse_family(std::string_view name) {
    for (const auto& [family, label] : kNames) {
        if (label == name) {
            return family;
        }
    }
    throw InputError("unknown family \"" + std::string(name) + "\"");
}

std::string_view family_name(Family family) {
    for (const auto& [f, label] : kNames) {
        if (f == family) {
            return label;
        }
    }
    return "unknown";
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& entry : kNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return families;
}

}  // namespace sepcodes
