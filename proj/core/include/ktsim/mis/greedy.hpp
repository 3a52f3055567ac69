#pragma once

#include <cstdint>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/mis/mis.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

/// (rank, ID) pairs order the sampled vertices; larger wins.
struct RankedSample {
  std::vector<std::uint8_t> member;  // S membership
  std::vector<std::uint64_t> rank;   // meaningful for members only
};

/// Greedy over S in decreasing (rank, ID) order: take v unless an
/// S-neighbor was taken. Vertices outside S stay undecided.
MISOutput sequential_greedy_mis(const Graph& g, const IdAssignment& ids, const RankedSample& s);

struct GreedyRun {
  MISOutput output;  // sampled_greedy / dominated on S, undecided elsewhere
  RunMetrics metrics;
};

/// Distributed version: S-nodes announce their rank to every neighbor, then
/// a node enters once it outranks all its undecided S-neighbors; dominated
/// nodes tell their S-neighbors they are out.
GreedyRun parallel_greedy_mis(const Graph& g, const IdAssignment& ids, const RankedSample& s,
                              std::uint64_t seed, unsigned word_bits = 0);

}  // namespace ktsim
