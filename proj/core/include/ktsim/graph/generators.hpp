#pragma once

#include <cstdint>

#include "ktsim/graph/graph.hpp"

namespace ktsim {

/// Erdős–Rényi G(n, p). Identical (n, p, seed) give identical graphs.
/// Uses geometric skipping, so the cost is O(n + m) rather than O(n^2).
Graph generate_random_graph(std::size_t n, double p, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);  // vertex 0 is the center
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace ktsim
