#include "sepcodes/test_cover.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "sepcodes/errors.hpp"
#include "sepcodes/text_lines.hpp"

namespace sepcodes {

namespace {

void check_items(const TestCoverInstance& inst) {
    if (inst.items == 0) {
        throw InputError("test cover instance needs at least one item");
    }
    for (const auto& t : inst.tests) {
        for (auto item : t) {
            if (item >= inst.items) {
                throw InputError("test references unknown item " + std::to_string(item));
            }
        }
    }
}

bool splits(const Test& t, std::size_t a, std::size_t b) {
    const bool has_a = std::binary_search(t.begin(), t.end(), a);
    const bool has_b = std::binary_search(t.begin(), t.end(), b);
    return has_a != has_b;
}

}  // namespace

bool validate_test_cover(const TestCoverInstance& inst) {
    check_items(inst);
    for (std::size_t a = 0; a < inst.items; ++a) {
        for (std::size_t b = a + 1; b < inst.items; ++b) {
            const bool split = std::any_of(inst.tests.begin(), inst.tests.end(),
                                           [&](const Test& t) { return splits(t, a, b); });
            if (!split) {
                return false;
            }
        }
    }
    return true;
}

void require_reducible(const TestCoverInstance& inst) {
    if (!validate_test_cover(inst)) {
        throw InputError("not a test collection: some item pair is split by no test");
    }
    if (inst.items > 1 && (inst.tests.empty() || inst.budget == 0)) {
        throw InputError("an empty test list or a zero budget is only accepted for a single item");
    }
}

Hypergraph splitting_hypergraph(const TestCoverInstance& inst) {
    check_items(inst);
    Hypergraph h(inst.tests.size());
    for (std::size_t a = 0; a < inst.items; ++a) {
        for (std::size_t b = a + 1; b < inst.items; ++b) {
            VertexSet e(inst.tests.size());
            for (std::size_t i = 0; i < inst.tests.size(); ++i) {
                if (splits(inst.tests[i], a, b)) {
                    e.insert(static_cast<Vertex>(i));
                }
            }
            h.add_edge(std::move(e));
        }
    }
    return h;
}

CoverResult solve_test_cover(const TestCoverInstance& inst) {
    if (!validate_test_cover(inst)) {
        throw InputError("not a test collection: some item pair is split by no test");
    }
    return covering_number(splitting_hypergraph(inst));
}

TestCoverInstance read_test_cover(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.next_content_line();
    if (!header) {
        throw ParseError(reader.line_number(), "missing header \"|U| |T| l\"");
    }
    const auto fields = parse_unsigned_fields(*header, reader.line_number());
    if (fields.size() != 3) {
        throw ParseError(reader.line_number(), "expected header \"|U| |T| l\"");
    }
    TestCoverInstance inst;
    inst.items = fields[0];
    inst.budget = fields[2];
    if (inst.items == 0) {
        throw ParseError(reader.line_number(), "instance needs at least one item");
    }
    for (std::size_t i = 0; i < fields[1]; ++i) {
        const auto line = reader.next_non_comment_line();
        if (!line) {
            throw ParseError(reader.line_number(), "expected " + std::to_string(fields[1]) + " tests, found " +
                                                       std::to_string(i));
        }
        auto items = parse_unsigned_fields(*line, reader.line_number());
        std::sort(items.begin(), items.end());
        if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
            throw ParseError(reader.line_number(), "item repeated within a test");
        }
        for (auto item : items) {
            if (item >= inst.items) {
                throw ParseError(reader.line_number(), "unknown item " + std::to_string(item));
            }
        }
        inst.tests.push_back(std::move(items));
    }
    if (reader.next_content_line()) {
        throw ParseError(reader.line_number(), "unexpected content after the last test");
    }
    return inst;
}

TestCoverInstance read_test_cover_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open test cover file " + path.string());
    }
    return read_test_cover(in);
}

void write_test_cover(std::ostream& out, const TestCoverInstance& inst) {
    out << inst.items << ' ' << inst.tests.size() << ' ' << inst.budget << '\n';
    for (const auto& t : inst.tests) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << (i == 0 ? "" : " ") << t[i];
        }
        out << '\n';
    }
}

namespace {

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<std::size_t>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((mask >> i) & 1U) {
            out |= std::uint32_t{1} << perm[i];
        }
    }
    return out;
}

bool is_canonical(const std::vector<std::uint32_t>& masks, std::size_t items) {
    std::vector<std::size_t> perm(items);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::uint32_t> image(masks.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::transform(masks.begin(), masks.end(), image.begin(),
                       [&](std::uint32_t m) { return permute_mask(m, perm); });
        std::sort(image.begin(), image.end());
        if (image < masks) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<TestCoverInstance> enumerate_tiny_instances(std::size_t max_items, std::size_t max_tests,
                                                        std::size_t max_budget) {
    if (max_items > 6) {
        throw GuardError("tiny instance enumeration supports at most 6 items");
    }
    std::vector<TestCoverInstance> out;
    for (std::size_t items = 1; items <= max_items; ++items) {
        const std::uint32_t subsets = std::uint32_t{1} << items;
        for (std::size_t t = 0; t <= max_tests && t <= subsets; ++t) {
            std::vector<std::uint32_t> masks(t);
            std::iota(masks.begin(), masks.end(), std::uint32_t{0});
            while (true) {
                if (is_canonical(masks, items)) {
                    TestCoverInstance inst;
                    inst.items = items;
                    for (auto m : masks) {
                        Test test;
                        for (std::size_t i = 0; i < items; ++i) {
                            if ((m >> i) & 1U) {
                                test.push_back(i);
                            }
                        }
                        inst.tests.push_back(std::move(test));
                    }
                    if (validate_test_cover(inst)) {
                        for (std::size_t budget = 0; budget <= max_budget; ++budget) {
                            inst.budget = budget;
                            if (items <= 1 || (!inst.tests.empty() && budget > 0)) {
                                out.push_back(inst);
                            }
                        }
                    }
                }
                std::size_t i = t;
                while (i > 0 && masks[i - 1] == subsets - t + i - 1) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++masks[i - 1];
                for (std::size_t j = i; j < t; ++j) {
                    masks[j] = masks[j - 1] + 1;
                }
            }
        }
    }
    return out;
}

}  // namespace sepcodes
