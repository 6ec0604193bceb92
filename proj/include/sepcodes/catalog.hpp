#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepcodes/graph.hpp"

namespace sepcodes {

/// Every labeled graph on exactly n vertices (2^(n(n-1)/2) of them), n <= 6.
std::vector<Graph> all_labeled_graphs(std::size_t n);

/// Isomorphism-invariant relabeling: two graphs are isomorphic iff their forms are equal.
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class on exactly n vertices, n <= 8,
/// sorted by edge list.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

/// Reproducible random graphs: orders uniform in [min_n, max_n], edge density drawn per graph.
/// Uses raw mt19937_64 output so the sequence is identical across standard libraries.
std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

}  // namespace sepcodes
