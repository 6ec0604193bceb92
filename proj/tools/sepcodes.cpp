// sepcodes: command-line front end for separation sets and identification codes.
//
// Exit codes: 0 success, 1 input error, 2 infeasible result or failed check.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepcodes/admissibility.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/graph_io.hpp"
#include "sepcodes/reductions.hpp"
#include "sepcodes/report.hpp"
#include "sepcodes/separation.hpp"
#include "sepcodes/test_cover.hpp"
#include "sepcodes/verify.hpp"

using namespace sepcodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;

struct Globals {
    std::size_t guard = 40;
    bool pretty = false;
    bool timing = false;
    std::vector<std::string> argv;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

void enforce_guard(const Globals& g, std::size_t universe) {
    if (universe > g.guard) {
        throw GuardError("solver universe " + std::to_string(universe) + " exceeds --guard " +
                         std::to_string(g.guard) + " (raise it with --guard or SEPCODES_GUARD)");
    }
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json run_report(const Globals& g, const std::string& digest_input) {
    Json report;
    report["command"] = g.argv;
    report["inputs_digest"] = "sha256:" + sha256_hex(digest_input);
    report["results"] = Json::array();
    report["failures"] = Json::array();
    return report;
}

std::string cell(const Json& j) {
    if (j.is_null()) {
        return "-";
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    return j.dump();
}

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    const auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::cout << std::left << std::setw(static_cast<int>(width[c]) + 2) << r[c];
        }
        std::cout << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
}

void emit(const Globals& g, const Json& report, const std::string& verb) {
    if (!g.pretty) {
        std::cout << dump_canonical(report);
        return;
    }
    const auto& results = report["results"];
    if (verb == "compute") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            rows.push_back({cell(r["kind"]), cell(r["feasible"]), cell(r["number"]), cell(r["witness"])});
        }
        print_table({"kind", "feasible", "number", "witness"}, rows);
    } else if (verb == "verify") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            for (const auto& c : r["clauses"]) {
                rows.push_back({cell(r["id"]), cell(c["status"]), cell(c["statement"])});
            }
        }
        print_table({"theorem", "status", "clause"}, rows);
    } else if (verb == "spiders") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            rows.push_back({cell(r["family"]), cell(r["kind"]), cell(r.value("expected", Json())),
                            cell(r["computed"]), cell(r.value("match", Json()))});
        }
        print_table({"family", "kind", "expected", "computed", "match"}, rows);
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

Json infeasibility_reason(const AdmissibilityReport& twins, const AnyKind& kind) {
    Json reason;
    const auto sep = kind.separation ? kind.separation : (kind.code ? separation_of(*kind.code) : std::nullopt);
    const bool total = kind.code && domination_of(*kind.code) == DominationKind::TD;
    if (sep && (*sep == SeparationKind::O || *sep == SeparationKind::F) && !twins.open_twins.empty()) {
        reason["open_twin"] = to_json(std::vector<Edge>{twins.open_twins.front()}).front();
    }
    if (sep && (*sep == SeparationKind::I || *sep == SeparationKind::F) && !twins.closed_twins.empty()) {
        reason["closed_twin"] = to_json(std::vector<Edge>{twins.closed_twins.front()}).front();
    }
    if (total && twins.isolated) {
        reason["isolated"] = *twins.isolated;
    }
    return reason;
}

// compute ---------------------------------------------------------------------

struct ComputeArgs {
    std::string graph;
    std::string kinds;
    bool raw = false;
};

int cmd_compute(const Globals& g, const ComputeArgs& a) {
    const auto text = slurp(a.graph);
    const auto graph = parse_graph_text(text);
    std::vector<std::string> kinds;
    if (a.kinds == "all") {
        for (auto s : kAllSeparations) {
            kinds.emplace_back(to_string(s));
        }
        for (auto x : kAllCodes) {
            kinds.emplace_back(to_string(x));
        }
    } else {
        kinds = split_list(a.kinds);
    }
    if (kinds.empty()) {
        throw InputError("no kind given");
    }
    std::vector<AnyKind> parsed;
    for (const auto& k : kinds) {
        parsed.push_back(parse_any_kind(k));
    }
    enforce_guard(g, graph.order());

    const auto twins = detect_twins(graph);
    auto report = run_report(g, text);
    report["graph"] = {{"n", graph.order()}, {"m", graph.edge_count()}};
    const CoverOptions options{.canonical_witness = true, .use_clutter = !a.raw};
    bool any_infeasible = false;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const Stopwatch sw;
        const auto& kind = parsed[i];
        const auto r = kind.separation ? s_number(graph, *kind.separation, options)
                                       : x_number(graph, *kind.code, options);
        auto item = cover_json(kinds[i], r);
        if (!r.feasible) {
            any_infeasible = true;
            item["reason"] = infeasibility_reason(twins, kind);
            report["failures"].push_back({{"kind", kinds[i]}, {"reason", item["reason"]}});
        }
        if (g.timing) {
            item["wall_ms"] = sw.ms();
        }
        report["results"].push_back(std::move(item));
    }
    emit(g, report, "compute");
    return any_infeasible ? kExitFailure : kExitOk;
}

// verify ----------------------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    std::string theorems;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    const auto text = slurp(a.graph);
    const auto graph = parse_graph_text(text);
    auto ids = a.theorems.empty() ? theorem_ids() : split_list(a.theorems);
    for (const auto& id : ids) {
        if (!is_theorem_id(id)) {
            throw InputError("unknown theorem id \"" + id + "\"");
        }
    }
    enforce_guard(g, graph.order());

    const bool needs_complement = std::any_of(ids.begin(), ids.end(), [](const std::string& id) {
        return id == "7" || id == "cor2";
    });
    const auto numbers = compute_numbers(graph);
    const auto twins = detect_twins(graph);
    const Graph co = complement(graph);
    GraphNumbers co_numbers;
    if (needs_complement) {
        co_numbers = compute_numbers(co);
    }
    const TheoremContext ctx{graph, numbers, twins, &co, needs_complement ? &co_numbers : nullptr};

    auto report = run_report(g, text);
    report["graph"] = {{"n", graph.order()}, {"m", graph.edge_count()}};
    bool failed = false;
    for (const auto& id : ids) {
        const Stopwatch sw;
        auto r = run_theorem(ctx, id);
        auto item = to_json(r);
        if (g.timing) {
            item["wall_ms"] = sw.ms();
        }
        if (r.verdict == Status::Fail) {
            failed = true;
            report["failures"].push_back(item);
        }
        report["results"].push_back(std::move(item));
    }
    emit(g, report, "verify");
    return failed ? kExitFailure : kExitOk;
}

// families --------------------------------------------------------------------

struct FamiliesArgs {
    std::string name;
    std::size_t k = 0;
    std::string out;
};

int cmd_families(const Globals& g, const FamiliesArgs& a) {
    const auto family = parse_family(a.name);
    const auto graph = make_family(family, a.k);
    auto report = run_report(g, "families:" + std::string(family_name(family)) + ":" + std::to_string(a.k));
    Json item{{"family", family_name(family)},
              {"param", a.k},
              {"n", graph.order()},
              {"m", graph.edge_count()},
              {"edges", to_json(graph.edges())}};
    if (!a.out.empty()) {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) {
            throw InputError("cannot write " + a.out);
        }
        write_graph(out, graph);
        item["out"] = a.out;
    }
    report["results"].push_back(std::move(item));
    emit(g, report, "families");
    return kExitOk;
}

// reduce ----------------------------------------------------------------------

struct ReduceArgs {
    std::string testcover;
    std::string sep;
    std::string out;
    bool verify = false;
    bool deep = false;
};

int cmd_reduce(const Globals& g, const ReduceArgs& a) {
    const auto text = slurp(a.testcover);
    std::istringstream in(text);
    const auto inst = read_test_cover(in);
    const auto s = parse_separation(a.sep);
    const auto art = reduce(inst, s);

    auto report = run_report(g, text + "\nsep:" + a.sep);
    auto item = to_json(art, inst);
    bool failed = false;

    const auto tc = solve_test_cover(inst);
    item["test_cover"] = cover_json("test_cover", tc);
    if (tc.tau <= inst.budget) {
        const auto fw = forward_witness(art, inst, padded_test_collection(inst));
        auto fw_json = to_json(fw);
        fw_json["k"] = art.k;
        fw_json["region_bound_holds"] = fw.valid && check_gadget_lower_bound(art, inst, fw.set);
        if (!fw.valid || fw.set.size() > art.k) {
            failed = true;
            report["failures"].push_back({{"forward_witness", fw_json}});
        }
        item["forward_witness"] = std::move(fw_json);
    }
    if (s == SeparationKind::L) {
        item["twin_structure_holds"] = check_l_twin_structure(art, inst);
    }

    if (a.verify) {
        if (s == SeparationKind::F && !a.deep) {
            item["iff"] = {{"skipped", "exact F verification requires --deep"}};
        } else {
            enforce_guard(g, art.graph.order());
            const Stopwatch sw;
            const auto r = verify_reduction_iff(inst, s, {.deep = a.deep, .max_vertices = g.guard});
            auto iff = to_json(r);
            if (g.timing) {
                iff["wall_ms"] = sw.ms();
            }
            if (!r.agree || !r.region_ok) {
                failed = true;
                report["failures"].push_back({{"iff", iff}});
            }
            item["iff"] = std::move(iff);
        }
    }
    if (!a.out.empty()) {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) {
            throw InputError("cannot write " + a.out);
        }
        write_graph(out, art.graph);
        item["out"] = a.out;
    }
    report["results"].push_back(std::move(item));
    emit(g, report, "reduce");
    return failed ? kExitFailure : kExitOk;
}

// dump ------------------------------------------------------------------------

struct DumpArgs {
    std::string graph;
    std::string sep;
    std::string kind;
    bool raw = false;
    std::string out;
};

int cmd_dump(const Globals& g, const DumpArgs& a) {
    if (a.sep.empty() == a.kind.empty()) {
        throw InputError("give exactly one of --sep or --kind");
    }
    const auto text = slurp(a.graph);
    const auto graph = parse_graph_text(text);
    const auto label = a.sep.empty() ? a.kind : a.sep;
    const auto kind = parse_any_kind(label);
    if (!a.sep.empty() && !kind.separation) {
        throw InputError("--sep expects one of L, O, I, F");
    }
    auto h = kind.separation ? separation_hypergraph(graph, *kind.separation) : code_hypergraph(graph, *kind.code);
    if (!a.raw) {
        h = reduce_to_clutter(h);
    }
    auto report = run_report(g, text + "\nkind:" + label);
    auto item = to_json(h);
    item["kind"] = label;
    item["clutter"] = !a.raw;
    if (!a.out.empty()) {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) {
            throw InputError("cannot write " + a.out);
        }
        write_hypergraph(out, h);
        item["out"] = a.out;
    }
    report["results"].push_back(std::move(item));
    emit(g, report, "dump");
    return kExitOk;
}

// spiders ---------------------------------------------------------------------

struct SpidersArgs {
    std::size_t k = 0;
    bool check = false;
};

int cmd_spiders(const Globals& g, const SpidersArgs& a) {
    if (a.k < 2) {
        throw InputError("spiders need k >= 2");
    }
    enforce_guard(g, 2 * a.k);
    auto report = run_report(g, "spiders:" + std::to_string(a.k) + (a.check ? ":check" : ""));
    bool failed = false;
    if (a.check) {
        for (const auto& c : check_spiders(a.k)) {
            auto item = to_json(c);
            if (!c.match) {
                failed = true;
                report["failures"].push_back(item);
            }
            report["results"].push_back(std::move(item));
        }
    } else {
        for (bool thick : {false, true}) {
            const auto graph = thick ? thick_spider(a.k) : thin_spider(a.k);
            const auto numbers = compute_numbers(graph);
            for (auto s : kAllSeparations) {
                auto item = cover_json(to_string(s), numbers.of(s));
                item["family"] = thick ? "thick" : "thin";
                report["results"].push_back(std::move(item));
            }
            for (auto x : kAllCodes) {
                auto item = cover_json(to_string(x), numbers.of(x));
                item["family"] = thick ? "thick" : "thin";
                report["results"].push_back(std::move(item));
            }
        }
        for (auto& item : report["results"]) {
            item["computed"] = item["number"];
        }
    }
    emit(g, report, "spiders");
    return failed ? kExitFailure : kExitOk;
}

std::size_t default_guard() {
    if (const char* env = std::getenv("SEPCODES_GUARD")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw InputError(std::string("SEPCODES_GUARD is not a number: ") + env);
        }
    }
    return 40;
}

}  // namespace

int main(int argc, char** argv) {
    Globals globals;
    for (int i = 1; i < argc; ++i) {
        globals.argv.emplace_back(argv[i]);
    }

    try {
        globals.guard = default_guard();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }

    CLI::App app{"Exact separation sets and identification codes via hypergraph covers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--guard", globals.guard, "Largest solver universe accepted (default 40, env SEPCODES_GUARD)");
    app.add_flag("--pretty", globals.pretty, "Render human-readable tables instead of JSON");
    app.add_flag("--timing", globals.timing, "Add wall-clock times to results");

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Minimum S-set or X-code of a graph");
    c->add_option("--graph", compute.graph, "Graph file")->required();
    c->add_option("--kind", compute.kinds, "Kind (L,O,I,F,D,TD,LD,...,FTD), comma list, or 'all'")->required();
    c->add_flag("--raw", compute.raw, "Solve on the raw hypergraph instead of its clutter");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run theorem checks on a graph");
    v->add_option("--graph", verify.graph, "Graph file")->required();
    v->add_option("--theorems", verify.theorems, "Comma list of 3,4,5,7,cor2,fig2,eq1,eq2,eq4 (default all)");

    FamiliesArgs families;
    auto* f = app.add_subcommand("families", "Emit a named graph family member");
    f->add_option("--name", families.name, "path|cycle|clique|star|thin_spider|thick_spider|empty")->required();
    f->add_option("--k,-n", families.k, "Size parameter")->required();
    f->add_option("--out", families.out, "Write the graph file here");

    ReduceArgs reduce_args;
    auto* r = app.add_subcommand("reduce", "Build the Test Cover reduction graph");
    r->add_option("--testcover", reduce_args.testcover, "Test cover file")->required();
    r->add_option("--sep", reduce_args.sep, "I|O|F|L")->required();
    r->add_option("--out", reduce_args.out, "Write the reduction graph here");
    r->add_flag("--verify", reduce_args.verify, "Check the iff by exact solving");
    r->add_flag("--deep", reduce_args.deep, "Allow exact solving for F");

    DumpArgs dump;
    auto* d = app.add_subcommand("dump", "List the hypergraph of a separation or code kind");
    d->add_option("--graph", dump.graph, "Graph file")->required();
    d->add_option("--sep", dump.sep, "L|O|I|F");
    d->add_option("--kind", dump.kind, "Any of the 14 kinds");
    d->add_flag("--raw", dump.raw, "Keep redundant and repeated edges");
    d->add_option("--out", dump.out, "Write the dump file here");

    SpidersArgs spiders;
    auto* s = app.add_subcommand("spiders", "Numbers of thin and thick headless spiders");
    s->add_option("--k", spiders.k, "Spider size")->required();
    s->add_flag("--check", spiders.check, "Compare with the closed forms (k >= 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c) {
            return cmd_compute(globals, compute);
        }
        if (*v) {
            return cmd_verify(globals, verify);
        }
        if (*f) {
            return cmd_families(globals, families);
        }
        if (*r) {
            return cmd_reduce(globals, reduce_args);
        }
        if (*d) {
            return cmd_dump(globals, dump);
        }
        if (*s) {
            return cmd_spiders(globals, spiders);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
