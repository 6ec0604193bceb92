#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sepcodes/graph.hpp"

namespace sepcodes {

// Text format:
//   n m
//   u v        (m lines, 0 <= u < v < n)
// Lines starting with '#' are comments; blank lines are ignored.

/// Throws ParseError (with line number) on malformed input, self-loops or duplicates.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

/// Writes the canonical form: header, then edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace sepcodes
