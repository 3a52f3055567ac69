#pragma once

#include <cstdint>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/mis/mis.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

struct LubyRun {
  MISOutput output;
  RunMetrics metrics;
};

/// Random-mark Luby on the vertices with participate[v] = 1 and the edges
/// between them. Each iteration (2 rounds) an active node draws a 64-bit
/// mark and enters if it beats every mark it hears (ties by ID); entrants'
/// neighbors drop out and tell their remaining neighbors. Non-participants
/// stay undecided.
LubyRun luby_mis(const Graph& g, const IdAssignment& ids, const std::vector<std::uint8_t>& participate,
                 std::uint64_t seed, unsigned word_bits = 0);

/// Whole graph, identity IDs.
LubyRun luby_mis(const Graph& g, std::uint64_t seed);

}  // namespace ktsim
