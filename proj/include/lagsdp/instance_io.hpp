#pragma once

#include <cstdint>
#include <string>

#include "lagsdp/graph.hpp"

namespace lagsdp {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text: first line "n m", then m lines "i j w" with 1-based
// endpoints. Malformed lines, out-of-range endpoints and duplicate edges
// raise ParseError naming the offending line.
GraphInstance parse_edge_list(const std::string& text);

GraphInstance load_edge_list_file(const std::string& path);

// Band graph: edges {i,j} with j - i <= k + 1; floor(m/2) edges get weight
// -1 (seeded uniform choice), the rest +1.
GraphInstance generate_band(int n, int k, uint64_t seed);

// Toroidal grid, right and down wrap-around neighbours, weights +-1 with
// floor(m/2) negative. Grids thinner than 3 collapse parallel edges by
// summing their weights.
GraphInstance generate_spinglass_torus(int nt, int nr, uint64_t seed);

} // namespace lagsdp
