#include "sepcodes/verify.hpp"

#include <algorithm>
#include <functional>

#include "sepcodes/errors.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/separation.hpp"

namespace sepcodes {

namespace {

void require_s_set(const Graph& g, SeparationKind s, const VertexSet& c) {
    if (!is_s_set(g, s, c)) {
        throw InputError("input is not an " + std::string(to_string(s)) + "-set");
    }
}

void require_no_isolated(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            throw InputError("graph has an isolated vertex " + std::to_string(v));
        }
    }
}

}  // namespace

VertexSet augment_to_sd_code(const Graph& g, SeparationKind s, const VertexSet& c) {
    require_s_set(g, s, c);
    VertexSet out = c;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!closed_neighborhood(g, v).intersects(c)) {
            out.insert(v);
            break;
        }
    }
    return out;
}

VertexSet augment_to_std_code_of(const Graph& g, SeparationKind s, const VertexSet& c) {
    if (s != SeparationKind::O && s != SeparationKind::F) {
        throw InputError("augment_to_std_code_of expects O or F");
    }
    require_no_isolated(g);
    require_s_set(g, s, c);
    VertexSet out = c;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!g.neighbors(v).intersects(c)) {
            out.insert(*g.neighbors(v).first());
            break;
        }
    }
    return out;
}

VertexSet augment_to_std_code_li(const Graph& g, SeparationKind s, const VertexSet& c) {
    if (s != SeparationKind::L && s != SeparationKind::I) {
        throw InputError("augment_to_std_code_li expects L or I");
    }
    require_no_isolated(g);
    require_s_set(g, s, c);
    const auto n = static_cast<Vertex>(g.order());

    VertexSet needy(n);
    c.for_each([&](Vertex v) {
        if (!g.neighbors(v).intersects(c)) {
            needy.insert(v);
        }
    });

    VertexSet out = c;
    while (!needy.empty()) {
        Vertex pick = 0;
        std::size_t best = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (c.contains(u)) {
                continue;
            }
            const auto covered = (g.neighbors(u) & needy).size();
            if (covered > best) {
                best = covered;
                pick = u;
            }
        }
        out.insert(pick);
        needy -= g.neighbors(pick);
    }

    for (Vertex v = 0; v < n; ++v) {
        if (!g.neighbors(v).intersects(out)) {
            out.insert(*g.neighbors(v).first());
            break;
        }
    }
    return out;
}

GraphNumbers compute_numbers(const Graph& g, const CoverOptions& options) {
    GraphNumbers out;
    for (auto s : kAllSeparations) {
        out.separation[static_cast<std::size_t>(s)] = s_number(g, s, options);
    }
    for (auto x : kAllCodes) {
        out.code[static_cast<std::size_t>(x)] = x_number(g, x, options);
    }
    return out;
}

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"3", "4", "5", "7", "cor2", "fig2", "eq1", "eq2", "eq4"};
    return ids;
}

bool is_theorem_id(std::string_view id) {
    const auto& ids = theorem_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const std::vector<std::pair<CodeKind, CodeKind>>& figure_order_arrows() {
    using C = CodeKind;
    static const std::vector<std::pair<C, C>> arrows{
        {C::LD, C::OD},   {C::LD, C::ID},   {C::OD, C::FD},   {C::ID, C::FD},
        {C::LTD, C::OTD}, {C::LTD, C::ITD}, {C::OTD, C::FTD}, {C::ITD, C::FTD},
        {C::LD, C::LTD},  {C::OD, C::OTD},  {C::ID, C::ITD},  {C::FD, C::FTD},
    };
    return arrows;
}

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string id, const TheoremContext& ctx) {
        report_.id = std::move(id);
        report_.order = ctx.g.order();
        report_.edges = ctx.g.edges();
        for (auto s : kAllSeparations) {
            report_.quantities.push_back({std::string(to_string(s)), ctx.numbers.of(s)});
        }
        for (auto x : kAllCodes) {
            report_.quantities.push_back({std::string(to_string(x)), ctx.numbers.of(x)});
        }
    }

    void add_complement(const GraphNumbers& co) {
        for (auto s : kAllSeparations) {
            report_.quantities.push_back({"co:" + std::string(to_string(s)), co.of(s)});
        }
        for (auto x : kAllCodes) {
            report_.quantities.push_back({"co:" + std::string(to_string(x)), co.of(x)});
        }
    }

    void skip(std::string statement) { report_.clauses.push_back({std::move(statement), Status::Skip}); }
    void check(std::string statement, bool ok) {
        report_.clauses.push_back({std::move(statement), ok ? Status::Pass : Status::Fail});
    }

    // a <= b when both sides are feasible, otherwise skipped.
    void leq(const std::string& lhs, const CoverResult& a, const std::string& rhs, const CoverResult& b) {
        const auto statement = lhs + " <= " + rhs;
        if (!a.feasible || !b.feasible) {
            skip(statement);
        } else {
            check(statement, a.tau <= b.tau);
        }
    }

    TheoremReport finish() && {
        const auto has = [&](Status s) {
            return std::any_of(report_.clauses.begin(), report_.clauses.end(),
                               [&](const Clause& c) { return c.status == s; });
        };
        report_.verdict = has(Status::Fail) ? Status::Fail : has(Status::Pass) ? Status::Pass : Status::Skip;
        return std::move(report_);
    }

private:
    TheoremReport report_;
};

std::string name(SeparationKind s) { return std::string(to_string(s)); }
std::string name(CodeKind x) { return std::string(to_string(x)); }

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Runs an augmentation and checks the result is an x-code within the bound.
void check_augmentation(ReportBuilder& rb, const Graph& g, const std::string& label, CodeKind x,
                        const VertexSet& c, std::size_t bound,
                        const std::function<VertexSet()>& augment) {
    const auto statement = label + "(" + c.to_string() + ") is an " + name(x) + "-code of size <= " +
                           std::to_string(bound);
    const auto out = augment();
    rb.check(statement, is_x_code(g, x, out) && c.is_subset_of(out) && out.size() <= bound);
}

}  // namespace

TheoremReport check_bound_theorems(const TheoremContext& ctx, std::string_view id) {
    ReportBuilder rb(std::string(id), ctx);
    const auto& g = ctx.g;
    const auto& nums = ctx.numbers;
    const bool total_ok = !ctx.twins.has_isolated();

    if (id == "3") {
        for (auto s : kAllSeparations) {
            const auto sd = combine(s, DominationKind::D);
            const auto statement = name(sd) + " <= " + name(s) + " + 1";
            if (!ctx.twins.admissible(s)) {
                rb.skip(statement);
                continue;
            }
            rb.check(statement, nums.of(sd).feasible && nums.of(sd).tau <= nums.of(s).tau + 1);
            const auto& c = nums.of(s).witness;
            check_augmentation(rb, g, "augment_sd", sd, c, c.size() + 1,
                               [&] { return augment_to_sd_code(g, s, c); });
        }
        if (nums.of(SeparationKind::L).feasible) {
            const auto& c = nums.of(SeparationKind::L).witness;
            std::size_t outsiders = 0;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (!closed_neighborhood(g, v).intersects(c)) {
                    ++outsiders;
                }
            }
            rb.check("at most one vertex v with N[v] disjoint from the minimum L-set", outsiders <= 1);
        }
    } else if (id == "4") {
        for (auto s : {SeparationKind::O, SeparationKind::F}) {
            const auto std_kind = combine(s, DominationKind::TD);
            const auto statement = name(std_kind) + " <= " + name(s) + " + 1";
            if (!ctx.twins.admissible(s) || !total_ok) {
                rb.skip(statement);
                continue;
            }
            rb.check(statement, nums.of(std_kind).feasible && nums.of(std_kind).tau <= nums.of(s).tau + 1);
            const auto& c = nums.of(s).witness;
            check_augmentation(rb, g, "augment_std_of", std_kind, c, c.size() + 1,
                               [&] { return augment_to_std_code_of(g, s, c); });
        }
        for (auto s : {SeparationKind::O, SeparationKind::F}) {
            const auto sd = combine(s, DominationKind::D);
            const auto st = combine(s, DominationKind::TD);
            const auto statement = "|" + name(sd) + " - " + name(st) + "| <= 1";
            if (!nums.of(sd).feasible || !nums.of(st).feasible) {
                rb.skip(statement);
            } else {
                rb.check(statement, distance(nums.of(sd).tau, nums.of(st).tau) <= 1);
            }
        }
    } else if (id == "5") {
        for (auto s : {SeparationKind::L, SeparationKind::I}) {
            const auto std_kind = combine(s, DominationKind::TD);
            const auto statement = name(std_kind) + " <= 2 * " + name(s);
            if (!ctx.twins.admissible(s) || !total_ok) {
                rb.skip(statement);
                continue;
            }
            rb.check(statement, nums.of(std_kind).feasible && nums.of(std_kind).tau <= 2 * nums.of(s).tau);
            const auto& c = nums.of(s).witness;
            check_augmentation(rb, g, "augment_std_li", std_kind, c, 2 * c.size(),
                               [&] { return augment_to_std_code_li(g, s, c); });
        }
    } else {
        throw InputError("not a bound theorem id: " + std::string(id));
    }
    return std::move(rb).finish();
}

namespace {

void require_complement(const TheoremContext& ctx) {
    if (ctx.complement == nullptr || ctx.complement_numbers == nullptr) {
        throw InputError("complement data missing from theorem context");
    }
}

bool same_clutter(const Graph& g, SeparationKind s, const Graph& co, SeparationKind t) {
    return reduce_to_clutter(separation_hypergraph(g, s)).edges() ==
           reduce_to_clutter(separation_hypergraph(co, t)).edges();
}

}  // namespace

TheoremReport check_complement_duality(const TheoremContext& ctx) {
    require_complement(ctx);
    ReportBuilder rb("7", ctx);
    rb.add_complement(*ctx.complement_numbers);
    const auto& a = ctx.numbers;
    const auto& b = *ctx.complement_numbers;
    const bool no_closed = ctx.twins.closed_twins.empty();
    const bool no_open = ctx.twins.open_twins.empty();

    struct Item {
        SeparationKind here;
        SeparationKind there;
        bool hypothesis;
    };
    using S = SeparationKind;
    const Item items[] = {
        {S::L, S::L, true},
        {S::I, S::O, no_closed},
        {S::O, S::I, no_open},
        {S::F, S::F, no_open && no_closed},
    };
    for (const auto& item : items) {
        const auto eq = name(item.here) + " = co:" + name(item.there);
        const auto hyp = "H_" + name(item.here) + " clutter = co:H_" + name(item.there) + " clutter";
        if (!item.hypothesis) {
            rb.skip(eq);
            rb.skip(hyp);
            continue;
        }
        const auto& x = a.of(item.here);
        const auto& y = b.of(item.there);
        rb.check(eq, x.feasible == y.feasible && (!x.feasible || x.tau == y.tau));
        rb.check(hyp, same_clutter(ctx.g, item.here, *ctx.complement, item.there));
    }
    return std::move(rb).finish();
}

TheoremReport check_gap_corollary(const TheoremContext& ctx) {
    require_complement(ctx);
    ReportBuilder rb("cor2", ctx);
    rb.add_complement(*ctx.complement_numbers);
    const auto& a = ctx.numbers;
    const auto& b = *ctx.complement_numbers;
    const bool no_closed = ctx.twins.closed_twins.empty();
    const bool no_open = ctx.twins.open_twins.empty();

    using C = CodeKind;
    struct Item {
        CodeKind here;
        CodeKind there;
        bool hypothesis;
    };
    const Item items[] = {
        {C::LD, C::LD, true},
        {C::ID, C::OD, no_closed},
        {C::OD, C::ID, no_open},
        {C::FD, C::FD, no_open && no_closed},
        {C::FTD, C::FTD, no_open && no_closed},
    };
    for (const auto& item : items) {
        const auto statement = "|" + name(item.here) + " - co:" + name(item.there) + "| <= 1";
        const auto& x = a.of(item.here);
        const auto& y = b.of(item.there);
        if (!item.hypothesis || !x.feasible || !y.feasible) {
            rb.skip(statement);
            continue;
        }
        rb.check(statement, distance(x.tau, y.tau) <= 1);
    }
    return std::move(rb).finish();
}

TheoremReport check_order(const TheoremContext& ctx, std::string_view id) {
    ReportBuilder rb(std::string(id), ctx);
    const auto& nums = ctx.numbers;
    using C = CodeKind;
    using S = SeparationKind;

    if (id == "eq1") {
        rb.leq("D", nums.of(C::D), "TD", nums.of(C::TD));
    } else if (id == "eq2") {
        for (auto x : {C::LD, C::OD, C::ID, C::FD}) {
            rb.leq("D", nums.of(C::D), name(x), nums.of(x));
        }
        for (auto x : {C::LTD, C::OTD, C::ITD, C::FTD}) {
            rb.leq("TD", nums.of(C::TD), name(x), nums.of(x));
        }
    } else if (id == "eq4") {
        for (auto s : kAllSeparations) {
            const auto sd = combine(s, DominationKind::D);
            const auto st = combine(s, DominationKind::TD);
            rb.leq(name(s), nums.of(s), name(sd), nums.of(sd));
            rb.leq(name(sd), nums.of(sd), name(st), nums.of(st));
        }
    } else if (id == "fig2") {
        for (const auto& [lo, hi] : figure_order_arrows()) {
            rb.leq(name(lo), nums.of(lo), name(hi), nums.of(hi));
        }
        rb.leq("L", nums.of(S::L), "O", nums.of(S::O));
        rb.leq("L", nums.of(S::L), "I", nums.of(S::I));
        rb.leq("O", nums.of(S::O), "F", nums.of(S::F));
        rb.leq("I", nums.of(S::I), "F", nums.of(S::F));
    } else {
        throw InputError("not an order check id: " + std::string(id));
    }
    return std::move(rb).finish();
}

TheoremReport run_theorem(const TheoremContext& ctx, std::string_view id) {
    if (id == "3" || id == "4" || id == "5") {
        return check_bound_theorems(ctx, id);
    }
    if (id == "7") {
        return check_complement_duality(ctx);
    }
    if (id == "cor2") {
        return check_gap_corollary(ctx);
    }
    if (id == "eq1" || id == "eq2" || id == "eq4" || id == "fig2") {
        return check_order(ctx, id);
    }
    throw InputError("unknown theorem id \"" + std::string(id) + "\"");
}

namespace {

struct Prepared {
    Graph g;
    Graph co;
    GraphNumbers numbers;
    GraphNumbers co_numbers;
    AdmissibilityReport twins;

    explicit Prepared(const Graph& graph)
        : g(graph), co(complement(graph)), numbers(compute_numbers(g)), co_numbers(compute_numbers(co)),
          twins(detect_twins(g)) {}

    TheoremContext context() const { return {g, numbers, twins, &co, &co_numbers}; }
};

}  // namespace

TheoremReport check_complement_duality(const Graph& g) {
    const Prepared p(g);
    return check_complement_duality(p.context());
}

TheoremReport check_gap_corollary(const Graph& g) {
    const Prepared p(g);
    return check_gap_corollary(p.context());
}

TheoremReport check_bound_theorems(const Graph& g) {
    const auto numbers = compute_numbers(g);
    const auto twins = detect_twins(g);
    const TheoremContext ctx{g, numbers, twins};
    TheoremReport merged;
    merged.id = "3,4,5";
    merged.verdict = Status::Skip;
    for (const auto* id : {"3", "4", "5"}) {
        auto r = check_bound_theorems(ctx, id);
        if (merged.quantities.empty()) {
            merged.order = r.order;
            merged.edges = r.edges;
            merged.quantities = r.quantities;
        }
        merged.clauses.insert(merged.clauses.end(), r.clauses.begin(), r.clauses.end());
        if (r.verdict == Status::Fail || (r.verdict == Status::Pass && merged.verdict == Status::Skip)) {
            merged.verdict = r.verdict;
        }
    }
    return merged;
}

std::vector<SpiderEntry> spider_closed_forms(std::size_t k) {
    if (k < 4) {
        throw InputError("spider closed forms are stated for k >= 4");
    }
    // Thin: L O I F / LD OD ID FD / LTD OTD ITD FTD
    const std::vector<std::pair<const char*, std::size_t>> thin{
        {"L", k - 1},  {"O", k - 1},  {"I", k + 1},       {"F", 2 * k - 2},
        {"LD", k},     {"OD", k},     {"ID", k + 1},      {"FD", 2 * k - 2},
        {"LTD", k},    {"OTD", k},    {"ITD", 2 * k - 1}, {"FTD", 2 * k - 1},
    };
    const std::vector<std::pair<const char*, std::size_t>> thick{
        {"L", k - 1},   {"I", k - 1}, {"O", k + 1},   {"F", 2 * k - 2},
        {"LD", k - 1},  {"ID", k},    {"OD", k + 1},  {"FD", 2 * k - 2},
        {"LTD", k - 1}, {"ITD", k + 1}, {"OTD", k + 1}, {"FTD", 2 * k - 2},
    };
    std::vector<SpiderEntry> out;
    for (const auto& [kind, value] : thin) {
        out.push_back({false, kind, value});
    }
    for (const auto& [kind, value] : thick) {
        out.push_back({true, kind, value});
    }
    return out;
}

std::vector<SpiderCheck> check_spiders(std::size_t k) {
    const auto forms = spider_closed_forms(k);
    const Graph thin = thin_spider(k);
    const Graph thick = thick_spider(k);
    std::vector<SpiderCheck> out;
    for (const auto& entry : forms) {
        const Graph& g = entry.thick ? thick : thin;
        const auto kind = parse_any_kind(entry.kind);
        auto computed = kind.separation ? s_number(g, *kind.separation) : x_number(g, *kind.code);
        const bool match = computed.feasible && computed.tau == entry.expected;
        out.push_back({entry, std::move(computed), match});
    }
    return out;
}

}  // namespace sepcodes
