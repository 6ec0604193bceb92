#include "sepcodes/graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "sepcodes/errors.hpp"
#include "sepcodes/text_lines.hpp"

namespace sepcodes {

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::optional<GraphBuilder> builder;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t seen = 0;

    while (auto line = reader.next_content_line()) {
        const auto fields = parse_unsigned_fields(*line, reader.line_number());
        if (!builder) {
            if (fields.size() != 2) {
                throw ParseError(reader.line_number(), "expected header \"n m\"");
            }
            n = fields[0];
            m = fields[1];
            if (n == 0) {
                throw ParseError(reader.line_number(), "graph must have at least one vertex");
            }
            if (m > n * (n - 1) / 2) {
                throw ParseError(reader.line_number(), "more edges than a simple graph on n vertices allows");
            }
            builder.emplace(n);
            continue;
        }
        if (fields.size() != 2) {
            throw ParseError(reader.line_number(), "expected edge \"u v\"");
        }
        if (seen == m) {
            throw ParseError(reader.line_number(), "more edge lines than announced in header");
        }
        const auto u = fields[0];
        const auto v = fields[1];
        if (u >= n || v >= n) {
            throw ParseError(reader.line_number(), "edge endpoint out of range");
        }
        if (u == v) {
            throw ParseError(reader.line_number(), "self-loop");
        }
        if (builder->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw ParseError(reader.line_number(), "duplicate edge");
        }
        builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++seen;
    }
    if (!builder) {
        throw ParseError(reader.line_number(), "missing header");
    }
    if (seen != m) {
        throw ParseError(reader.line_number(),
                         "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
    }
    return std::move(*builder).build();
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file " + path.string());
    }
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace sepcodes
