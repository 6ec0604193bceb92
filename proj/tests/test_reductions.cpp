#include <doctest.h>

#include <sstream>

#include "sepcodes/errors.hpp"
#include "sepcodes/reductions.hpp"
#include "sepcodes/separation.hpp"
#include "sepcodes/test_cover.hpp"

using namespace sepcodes;

namespace {

TestCoverInstance instance(std::size_t items, std::vector<Test> tests, std::size_t budget) {
    return {items, std::move(tests), budget};
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("test cover validity") {
    CHECK(validate_test_cover(instance(3, {{0}, {1}}, 2)));
    CHECK_FALSE(validate_test_cover(instance(2, {{0, 1}}, 1)));
    CHECK(validate_test_cover(instance(4, {{0, 1}, {0, 2}}, 2)));
    CHECK_THROWS_AS(validate_test_cover(instance(2, {{0, 2}}, 1)), InputError);
    CHECK_THROWS_AS(validate_test_cover(instance(0, {}, 0)), InputError);
}

TEST_CASE("test cover solving") {
    const auto r = solve_test_cover(instance(3, {{0}, {1}, {0, 2}}, 2));
    CHECK(r.tau == 2);
    CHECK(solve_test_cover(instance(2, {{0}}, 1)).tau == 1);
    CHECK(splitting_hypergraph(instance(3, {{0}, {1}}, 2)).universe() == 2);
    CHECK_THROWS_AS(solve_test_cover(instance(2, {{0, 1}}, 1)), InputError);
}

TEST_CASE("test cover text format") {
    std::istringstream in("# items tests budget\n3 3 2\n0\n\n0 2\n");
    const auto inst = read_test_cover(in);
    CHECK(inst == instance(3, {{0}, {}, {0, 2}}, 2));
    std::ostringstream out;
    write_test_cover(out, inst);
    std::istringstream back(out.str());
    CHECK(read_test_cover(back) == inst);

    std::istringstream extra("2 1 1\n0\n1\n");
    CHECK_THROWS_AS(read_test_cover(extra), ParseError);
    std::istringstream bad_item("2 1 1\n3\n");
    CHECK_THROWS_AS(read_test_cover(bad_item), InputError);
    std::istringstream short_file("3 2 1\n0\n");
    CHECK_THROWS_AS(read_test_cover(short_file), ParseError);
}

TEST_CASE("tiny instance family") {
    const auto family = enumerate_tiny_instances(4, 4, 2);
    CHECK(family.size() == 324);
    for (const auto& inst : family) {
        CHECK(validate_test_cover(inst));
        CHECK(inst.items <= 4);
        CHECK(inst.tests.size() <= 4);
        CHECK(inst.budget <= 2);
    }
}

TEST_CASE("gadgets") {
    const auto i = build_gadget(SeparationKind::I);
    CHECK(i.graph.order() == 6);
    CHECK(i.graph.edge_count() == 5);
    CHECK(i.designated.members() == std::vector<Vertex>{2});
    const auto f = build_gadget(SeparationKind::F);
    CHECK(f.graph.order() == 16);
    CHECK(f.graph.edge_count() == 15);
    CHECK(f.graph.degree(3) == 3);
    CHECK(f.graph.degree(4) == 3);
    CHECK(f.designated.members() == std::vector<Vertex>{4});
    const auto l = build_gadget(SeparationKind::L);
    CHECK(l.graph.order() == 4);
    CHECK(l.graph.edge_count() == 4);
    CHECK(l.designated.members() == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(build_gadget(SeparationKind::O), InputError);
}

TEST_CASE("reduction sizes") {
    const auto inst = instance(3, {{0}, {1}}, 2);
    const auto gi = reduce(inst, SeparationKind::I);
    CHECK(gi.graph.order() == 23);
    CHECK(gi.k == 13);
    const auto go = reduce(inst, SeparationKind::O);
    CHECK(go.graph == complement(gi.graph));
    CHECK(go.k == 13);
    const auto gf = reduce(inst, SeparationKind::F);
    CHECK(gf.graph.order() == 53);
    CHECK(gf.k == 37);
    const auto gl = reduce(inst, SeparationKind::L);
    CHECK(gl.copies == 3);
    CHECK(gl.m.size() + gl.r.size() == 21);
    CHECK(gl.graph.order() == 35);
    CHECK(gl.k == 13);
    CHECK(check_l_twin_structure(gl, inst));
    CHECK(gl.labels(inst.items).size() == 35);
    CHECK_THROWS_AS(reduce(instance(2, {{0, 1}}, 1), SeparationKind::I), InputError);
}

TEST_CASE("lower bound on minimum sets") {
    const auto inst = instance(3, {{0}, {1}}, 2);
    for (auto s : {SeparationKind::I, SeparationKind::L}) {
        const auto art = reduce(inst, s);
        const auto r = s_number(art.graph, s, {.canonical_witness = false, .use_clutter = true});
        REQUIRE(r.feasible);
        CHECK(check_gadget_lower_bound(art, inst, r.witness));
    }
    const auto art = reduce(inst, SeparationKind::I);
    CHECK_THROWS_AS(check_gadget_lower_bound(art, inst, VertexSet(art.graph.order())), InputError);
}

TEST_CASE("forward witnesses") {
    const auto inst = instance(3, {{0}, {1}}, 2);
    for (auto s : {SeparationKind::I, SeparationKind::O, SeparationKind::F, SeparationKind::L}) {
        CAPTURE(to_string(s));
        const auto art = reduce(inst, s);
        const auto fw = forward_witness(art, inst, padded_test_collection(inst));
        CHECK(fw.valid);
        CHECK(is_s_set(art.graph, s, fw.set));
        CHECK(fw.set.size() == reduction_target(s, inst));
    }
}

TEST_CASE("iff on small instances") {
    const auto yes = verify_reduction_iff(instance(3, {{0}, {1}}, 2), SeparationKind::I);
    CHECK(yes.test_cover_yes);
    CHECK(yes.graph_yes);
    CHECK(yes.agree);
    CHECK(yes.region_ok);
    const auto no = verify_reduction_iff(instance(3, {{0}, {1}}, 1), SeparationKind::I);
    CHECK_FALSE(no.test_cover_yes);
    CHECK_FALSE(no.graph_yes);
    CHECK(no.agree);
    CHECK(verify_reduction_iff(instance(2, {{0}}, 1), SeparationKind::L).agree);
    CHECK(verify_reduction_iff(instance(3, {{0}, {1}}, 2), SeparationKind::O).agree);
    CHECK_THROWS_AS(verify_reduction_iff(instance(3, {{0}, {1}}, 2), SeparationKind::F), GuardError);
    CHECK_THROWS_AS(verify_reduction_iff(instance(3, {{0}, {1}}, 2), SeparationKind::I, {.deep = false, .max_vertices = 10}),
                    GuardError);
}

}
