#include <doctest.h>

#include "sepcodes/admissibility.hpp"
#include "sepcodes/catalog.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/separation.hpp"
#include "sepcodes/verify.hpp"
#include "support.hpp"

using namespace sepcodes;
using sepcodes::testing::set_of;

TEST_SUITE("verify") {

TEST_CASE("augment to SD-code") {
    const auto h4 = thin_spider(4);
    const auto i_set = s_number(h4, SeparationKind::I).witness;
    REQUIRE(i_set.size() == 5);
    const auto id = augment_to_sd_code(h4, SeparationKind::I, i_set);
    CHECK(is_x_code(h4, CodeKind::ID, id));
    CHECK(id.size() <= 6);
    CHECK(x_number(h4, CodeKind::ID).tau == 5);

    const auto p5 = path_graph(5);
    const auto l_set = s_number(p5, SeparationKind::L).witness;
    const auto ld = augment_to_sd_code(p5, SeparationKind::L, l_set);
    CHECK(is_x_code(p5, CodeKind::LD, ld));
    CHECK(ld.size() <= l_set.size() + 1);

    const auto full = VertexSet::full(5);
    CHECK(augment_to_sd_code(p5, SeparationKind::F, full) == full);
    CHECK_THROWS_AS(augment_to_sd_code(p5, SeparationKind::O, set_of(5, {0})), InputError);
}

TEST_CASE("augment to STD-code for O and F") {
    const auto h4 = thin_spider(4);
    const auto o_set = s_number(h4, SeparationKind::O).witness;
    REQUIRE(o_set.size() == 3);
    const auto otd = augment_to_std_code_of(h4, SeparationKind::O, o_set);
    CHECK(is_x_code(h4, CodeKind::OTD, otd));
    CHECK(otd.size() <= 4);

    const auto h5 = thin_spider(5);
    const auto f_set = s_number(h5, SeparationKind::F).witness;
    REQUIRE(f_set.size() == 8);
    const auto ftd = augment_to_std_code_of(h5, SeparationKind::F, f_set);
    CHECK(is_x_code(h5, CodeKind::FTD, ftd));
    CHECK(ftd.size() <= 9);

    const auto c6 = cycle_graph(6);
    const auto full = VertexSet::full(6);
    CHECK(augment_to_std_code_of(c6, SeparationKind::O, full) == full);
    const auto iso = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(augment_to_std_code_of(iso, SeparationKind::F, VertexSet::full(4)), InputError);
    CHECK_THROWS_AS(augment_to_std_code_of(c6, SeparationKind::L, full), InputError);
}

TEST_CASE("augment to STD-code for L and I") {
    const auto h4 = thin_spider(4);
    const auto i_set = s_number(h4, SeparationKind::I).witness;
    const auto itd = augment_to_std_code_li(h4, SeparationKind::I, i_set);
    CHECK(is_x_code(h4, CodeKind::ITD, itd));
    CHECK(itd.size() <= 10);
    CHECK(x_number(h4, CodeKind::ITD).tau == 7);

    const auto p4 = path_graph(4);
    const auto ltd = set_of(4, {1, 2});
    CHECK(augment_to_std_code_li(p4, SeparationKind::L, ltd) == ltd);
    const auto iso = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(augment_to_std_code_li(iso, SeparationKind::L, VertexSet::full(3)), InputError);
}

TEST_CASE("augmentations on random graphs") {
    std::size_t checked = 0;
    for (const auto& g : random_graphs(200, 2, 9, 5)) {
        const auto twins = detect_twins(g);
        for (auto s : kAllSeparations) {
            const auto r = s_number(g, s);
            if (!r.feasible) {
                continue;
            }
            const auto sd = augment_to_sd_code(g, s, r.witness);
            CHECK(is_x_code(g, combine(s, DominationKind::D), sd));
            CHECK(sd.size() <= r.tau + 1);
            if (twins.has_isolated()) {
                continue;
            }
            const bool of = s == SeparationKind::O || s == SeparationKind::F;
            const auto td = of ? augment_to_std_code_of(g, s, r.witness) : augment_to_std_code_li(g, s, r.witness);
            CHECK(is_x_code(g, combine(s, DominationKind::TD), td));
            CHECK(td.size() <= (of ? r.tau + 1 : 2 * r.tau));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("theorem checks on the house") {
    const auto g = testing::house();
    const auto numbers = compute_numbers(g);
    const auto twins = detect_twins(g);
    const auto co = complement(g);
    const auto co_numbers = compute_numbers(co);
    const TheoremContext ctx{g, numbers, twins, &co, &co_numbers};
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        CHECK(run_theorem(ctx, id).verdict == Status::Pass);
    }
    CHECK_THROWS_AS(run_theorem(ctx, "8"), InputError);
    CHECK(is_theorem_id("cor2"));
    CHECK_FALSE(is_theorem_id("6"));
}

TEST_CASE("duality hypotheses unmet are skipped") {
    const auto star = star_graph(3);
    const auto r = check_complement_duality(star);
    CHECK(r.verdict != Status::Fail);
    bool skipped = false;
    for (const auto& c : r.clauses) {
        skipped = skipped || c.status == Status::Skip;
    }
    CHECK(skipped);
}

TEST_CASE("partial order arrows hold") {
    CHECK(figure_order_arrows().size() == 12);
    for (const auto& g : random_graphs(150, 1, 8, 3)) {
        const auto numbers = compute_numbers(g);
        for (const auto& [lo, hi] : figure_order_arrows()) {
            if (numbers.of(lo).feasible && numbers.of(hi).feasible) {
                CHECK(numbers.of(lo).tau <= numbers.of(hi).tau);
            }
        }
        const auto twins = detect_twins(g);
        const TheoremContext ctx{g, numbers, twins};
        for (const char* id : {"fig2", "eq1", "eq2", "eq4", "3", "4", "5"}) {
            CHECK(run_theorem(ctx, id).verdict != Status::Fail);
        }
    }
}

TEST_CASE("spiders") {
    for (const auto& c : check_spiders(5)) {
        CAPTURE(c.entry.kind);
        CHECK(c.match);
    }
    CHECK(spider_closed_forms(4).size() == 24);
    CHECK_THROWS_AS(spider_closed_forms(3), InputError);
}

}
