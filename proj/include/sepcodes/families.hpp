#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sepcodes/graph.hpp"

namespace sepcodes {

enum class Family { Path, Cycle, Clique, Star, ThinSpider, ThickSpider, Empty };

// Canonical labelings:
//   path(n)          0-1-...-(n-1), n >= 1
//   cycle(n)         path plus (0,n-1), n >= 3
//   clique(n)        n >= 1
//   star(k)          K_{1,k}: centre 0, leaves 1..k, k >= 1
//   thin_spider(k)   clique Q = 0..k-1, stable S = k..2k-1, q_i ~ s_i; k >= 2
//   thick_spider(k)  stable Q = 0..k-1, clique S = k..2k-1, q_i ~ s_j iff i != j; k >= 2
//   empty(n)         n >= 1 isolated vertices
Graph make_family(Family family, std::size_t param);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph clique_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph thin_spider(std::size_t k);
Graph thick_spider(std::size_t k);
Graph empty_graph(std::size_t n);

/// Accepts "path", "cycle", "clique", "star", "thin_spider", "thick_spider", "empty".
Family parse_family(std::string_view name);
std::string_view family_name(Family family);
const std::vector<Family>& all_families();

}  // namespace sepcodes
