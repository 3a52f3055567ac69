#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktsim/coloring/palette.hpp"
#include "ktsim/coloring/partition.hpp"
#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/sim/broadcast.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

struct Alg1Config {
  BroadcastBackendConfig broadcast{BroadcastBackendConfig::Mode::accounted_oracle, 0.5, 1.0};
  unsigned recursion_cap = 10;
  unsigned max_attempts = 5;
  std::uint64_t level_round_limit = 3000;
  unsigned word_bits = 0;
};

struct Alg1Level {
  std::size_t vertices = 0;
  std::size_t max_degree = 0;
  std::size_t k = 0;
  double q = 0.0;
  std::size_t leftover = 0;
  std::size_t leftover_edges = 0;
  std::size_t deferred = 0;  // B-vertices moved to L because their list share was too short
};

struct Alg1Result {
  ColoringOutput output;  // fixed_at = recursion level that colored the vertex
  RunMetrics metrics;
  unsigned recursion_depth = 0;  // recursive calls made by the successful attempt
  unsigned attempts = 0;
  bool flagged = false;  // every attempt failed
  std::string failure;   // last failure reason
  std::vector<Alg1Level> levels;
};

/// (Delta+1)-list coloring: broadcast shared random bits, partition into
/// B_1..B_k and L, color every B_i in parallel with its own color part,
/// then color G[L] directly once it has at most 8 n ceil(log2 n) edges,
/// recursing otherwise. A failed attempt (a list running dry, a stalled
/// level, recursion past the cap) restarts with fresh randomness.
/// Throws std::invalid_argument on an invalid palette.
Alg1Result alg1_delta_plus_one(const Graph& g, const IdAssignment& ids, const Palette& palette,
                               const Alg1Config& config, std::uint64_t seed);

/// 8 n ceil(log2 n).
std::uint64_t leftover_edge_threshold(std::size_t n);

}  // namespace ktsim
