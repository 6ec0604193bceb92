#include <doctest.h>

#include <sstream>

#include "sepcodes/admissibility.hpp"
#include "sepcodes/catalog.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/graph_io.hpp"
#include "support.hpp"

using namespace sepcodes;
using sepcodes::testing::set_of;

TEST_SUITE("graph") {

TEST_CASE("neighborhoods") {
    const auto p5 = path_graph(5);
    const auto k4 = clique_graph(4);
    CHECK(open_neighborhood(p5, 2) == set_of(5, {1, 3}));
    CHECK(open_neighborhood(k4, 0) == set_of(4, {1, 2, 3}));
    CHECK(open_neighborhood(Graph(1), 0).empty());
    CHECK(closed_neighborhood(p5, 2) == set_of(5, {1, 2, 3}));
    CHECK(closed_neighborhood(k4, 0) == VertexSet::full(4));
    CHECK(closed_neighborhood(empty_graph(3), 1) == set_of(3, {1}));
    CHECK_THROWS_AS(open_neighborhood(p5, 5), InputError);
    CHECK_THROWS_AS(closed_neighborhood(p5, 7), InputError);
}

TEST_CASE("complement") {
    CHECK(complement(path_graph(5)) == testing::house());
    CHECK(complement(path_graph(5)).edge_count() == 6);
    CHECK(complement(clique_graph(4)) == empty_graph(4));
    CHECK(complement(thin_spider(4)) == thick_spider(4));
    for (auto f : all_families()) {
        for (std::size_t p = 3; p <= 7; ++p) {
            const auto g = make_family(f, p);
            CHECK(complement(complement(g)) == g);
        }
    }
    for (const auto& g : random_graphs(100, 1, 12, 7)) {
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == g.order() * (g.order() - 1) / 2);
    }
}

TEST_CASE("twins and admissibility") {
    const auto star = detect_twins(star_graph(3));
    CHECK(star.open_twins == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(star.closed_twins.empty());
    for (auto x : {CodeKind::OD, CodeKind::OTD, CodeKind::FD, CodeKind::FTD}) {
        CHECK_FALSE(star.admissible(x));
    }
    CHECK_FALSE(star.admissible(SeparationKind::O));
    CHECK_FALSE(star.admissible(SeparationKind::F));
    CHECK(star.admissible(SeparationKind::I));

    const auto k4 = detect_twins(clique_graph(4));
    CHECK(k4.closed_twins.size() == 6);
    CHECK(k4.open_twins.empty());
    for (auto x : {CodeKind::ID, CodeKind::ITD, CodeKind::FD, CodeKind::FTD}) {
        CHECK_FALSE(k4.admissible(x));
    }
    CHECK(k4.admissible(CodeKind::OD));

    const auto p5 = detect_twins(path_graph(5));
    CHECK_FALSE(p5.has_isolated());
    CHECK(p5.open_twins.empty());
    CHECK(p5.closed_twins.empty());
    for (auto x : kAllCodes) {
        CHECK(p5.admissible(x));
    }

    const auto iso = detect_twins(Graph::from_edges(3, {{0, 1}}));
    REQUIRE(iso.isolated.has_value());
    CHECK(*iso.isolated == 2);
    CHECK_FALSE(iso.admissible(DominationKind::TD));
    CHECK(iso.admissible(DominationKind::D));
}

TEST_CASE("twins swap under complement") {
    for (const auto& g : random_graphs(200, 2, 9, 11)) {
        const auto a = detect_twins(g);
        const auto b = detect_twins(complement(g));
        CHECK(a.open_twins == b.closed_twins);
        CHECK(a.closed_twins == b.open_twins);
    }
}

TEST_CASE("families") {
    CHECK(canonical_form(thin_spider(2)) == canonical_form(path_graph(4)));
    CHECK(clique_graph(4).edge_count() == 6);
    CHECK(thin_spider(4).order() == 8);
    CHECK(thin_spider(4).edge_count() == 10);
    CHECK(thick_spider(5).edge_count() == 10 + 20);
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(parse_family("thick_spider") == Family::ThickSpider);
    CHECK(family_name(Family::ThinSpider) == "thin_spider");
    CHECK_THROWS_AS(parse_family("spider"), InputError);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(thin_spider(1), InputError);
    CHECK_THROWS_AS(path_graph(0), InputError);
}

TEST_CASE("graph text format") {
    std::istringstream ok("# a path\n4 3\n\n0 1\n1 2\n# mid comment\n2 3\n");
    const auto g = read_graph(ok);
    CHECK(g == path_graph(4));
    CHECK(graph_to_string(g) == "4 3\n0 1\n1 2\n2 3\n");

    const auto fails_at = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            read_graph(in);
        } catch (const ParseError& e) {
            return std::string(e.what()).find("line " + std::to_string(line)) != std::string::npos;
        }
        return false;
    };
    CHECK(fails_at("3 2\n0 1\n0 1\n", 3));
    CHECK(fails_at("3 1\n1 1\n", 2));
    CHECK(fails_at("3 1\n0 3\n", 2));
    CHECK(fails_at("3 1\n0 x\n", 2));
    CHECK(fails_at("0 0\n", 1));
    CHECK(fails_at("3 2\n0 1\n", 2));
    CHECK(fails_at("3 1\n0 1\n1 2\n", 3));
    CHECK(fails_at("3 4\n", 1));

    std::istringstream none("# only a comment\n");
    CHECK_THROWS_AS(read_graph(none), ParseError);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("catalog") {
    CHECK(all_labeled_graphs(4).size() == 64);
    const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156};
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(nonisomorphic_graphs(n).size() == counts[n - 1]);
    }
    CHECK(canonical_form(path_graph(5)) == canonical_form(Graph::from_edges(5, {{3, 1}, {1, 4}, {4, 0}, {0, 2}})));
    CHECK(random_graphs(5, 3, 9, 1) == random_graphs(5, 3, 9, 1));
    CHECK_THROWS_AS(all_labeled_graphs(7), GuardError);
}

}
