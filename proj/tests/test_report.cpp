#include <doctest.h>

#include "sepcodes/families.hpp"
#include "sepcodes/report.hpp"
#include "sepcodes/separation.hpp"

using namespace sepcodes;

TEST_SUITE("report") {

TEST_CASE("cover json") {
    const auto r = x_number(path_graph(5), CodeKind::LD);
    CHECK(dump_canonical(cover_json("LD", r)) == "{\"feasible\":true,\"kind\":\"LD\",\"number\":2,\"witness\":[1,3]}\n");
    const auto bad = s_number(clique_graph(3), SeparationKind::I);
    CHECK(dump_canonical(cover_json("I", bad)) == "{\"feasible\":false,\"kind\":\"I\",\"number\":null,\"witness\":null}\n");
}

TEST_CASE("admissibility json") {
    const auto j = to_json(detect_twins(star_graph(2)));
    CHECK(j["open_twins"] == Json::array({Json::array({1, 2})}));
    CHECK(j["admissible"]["O"] == false);
    CHECK(j["admissible"]["I"] == true);
    CHECK(j["isolated"].is_null());
}

TEST_CASE("failed theorem carries a counterexample") {
    TheoremReport r;
    r.id = "3";
    r.order = 2;
    r.edges = {{0, 1}};
    r.clauses = {{"x", Status::Fail}};
    r.verdict = Status::Fail;
    const auto j = to_json(r);
    CHECK(j["verdict"] == "fail");
    CHECK(j["counterexample"]["n"] == 2);
    r.verdict = Status::Pass;
    CHECK_FALSE(to_json(r).contains("counterexample"));
}

}
