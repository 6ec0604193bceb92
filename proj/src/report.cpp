#include "sepcodes/report.hpp"

namespace sepcodes {

Json to_json(const VertexSet& s) {
    Json out = Json::array();
    s.for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Json to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [u, v] : edges) {
        out.push_back(Json::array({u, v}));
    }
    return out;
}

Json cover_json(std::string_view kind, const CoverResult& r) {
    Json out;
    out["kind"] = kind;
    out["feasible"] = r.feasible;
    out["number"] = r.feasible ? Json(r.tau) : Json(nullptr);
    out["witness"] = r.feasible ? to_json(r.witness) : Json(nullptr);
    return out;
}

Json to_json(const AdmissibilityReport& a) {
    Json out;
    out["isolated"] = a.isolated ? Json(*a.isolated) : Json(nullptr);
    out["open_twins"] = to_json(a.open_twins);
    out["closed_twins"] = to_json(a.closed_twins);
    Json verdicts;
    for (auto s : kAllSeparations) {
        verdicts[std::string(to_string(s))] = a.admissible(s);
    }
    for (auto x : kAllCodes) {
        verdicts[std::string(to_string(x))] = a.admissible(x);
    }
    out["admissible"] = std::move(verdicts);
    return out;
}

Json to_json(const TheoremReport& r) {
    Json out;
    out["id"] = r.id;
    out["verdict"] = to_string(r.verdict);
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
        clauses.push_back({{"statement", c.statement}, {"status", to_string(c.status)}});
    }
    out["clauses"] = std::move(clauses);
    Json numbers;
    for (const auto& q : r.quantities) {
        numbers[q.name] = q.value.feasible ? Json(q.value.tau) : Json(nullptr);
    }
    out["numbers"] = std::move(numbers);
    if (r.verdict == Status::Fail) {
        Json payload;
        payload["n"] = r.order;
        payload["edges"] = to_json(r.edges);
        Json witnesses;
        for (const auto& q : r.quantities) {
            witnesses[q.name] = q.value.feasible ? to_json(q.value.witness) : Json(nullptr);
        }
        payload["witnesses"] = std::move(witnesses);
        out["counterexample"] = std::move(payload);
    }
    return out;
}

Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.sorted_edges()) {
        edges.push_back(to_json(e));
    }
    return {{"universe", h.universe()}, {"edge_count", h.edge_count()}, {"edges", std::move(edges)}};
}

Json to_json(const ReductionArtifact& art, const TestCoverInstance& inst) {
    Json out;
    out["sep"] = to_string(art.kind);
    out["n"] = art.graph.order();
    out["m"] = art.graph.edge_count();
    out["k"] = art.k;
    out["copies"] = art.copies;
    Json regions;
    const auto ids = [](const std::vector<Vertex>& vs) {
        Json a = Json::array();
        for (auto v : vs) {
            a.push_back(v);
        }
        return a;
    };
    regions["M"] = ids(art.m);
    regions["R"] = ids(art.r);
    regions["W"] = ids(art.w);
    Json blocks = Json::array();
    for (const auto& b : art.test_gadgets) {
        blocks.push_back(ids(b));
    }
    regions["V_T"] = std::move(blocks);
    regions["V_U"] = ids(art.u_gadget);
    out["regions"] = std::move(regions);
    out["labels"] = art.labels(inst.items);
    return out;
}

Json to_json(const ForwardWitness& fw) {
    Json tests = Json::array();
    for (auto t : fw.chosen_tests) {
        tests.push_back(t);
    }
    return {{"tests", std::move(tests)},
            {"set", to_json(fw.set)},
            {"size", fw.set.size()},
            {"valid", fw.valid},
            {"padding", fw.padding},
            {"layout", fw.published_layout ? "published" : "fallback"}};
}

Json to_json(const IffResult& r) {
    Json out;
    out["sep"] = to_string(r.kind);
    out["n"] = r.vertices;
    out["k"] = r.k;
    out["test_cover"] = cover_json("test_cover", r.test_cover);
    out["test_cover_yes"] = r.test_cover_yes;
    out["graph"] = cover_json(to_string(r.kind), r.graph);
    out["graph_yes"] = r.graph_yes;
    out["agree"] = r.agree;
    out["region_bound_holds"] = r.region_ok;
    return out;
}

Json to_json(const SpiderCheck& c) {
    return {{"family", c.entry.thick ? "thick" : "thin"},
            {"kind", c.entry.kind},
            {"expected", c.entry.expected},
            {"computed", c.computed.feasible ? Json(c.computed.tau) : Json(nullptr)},
            {"match", c.match}};
}

std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

}  // namespace sepcodes
