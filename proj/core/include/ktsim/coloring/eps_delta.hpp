#pragma once

#include <cstdint>
#include <string>

#include "ktsim/coloring/palette.hpp"
#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/hash/poly_hash.hpp"
#include "ktsim/sim/broadcast.hpp"
#include "ktsim/sim/trace.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

struct Alg2Config {
  double eps = 0.5;
  BroadcastBackendConfig broadcast{BroadcastBackendConfig::Mode::accounted_oracle, 0.0, 1.0};
  unsigned max_attempts = 5;
  unsigned word_bits = 0;
  bool record_trace = false;
};

struct Alg2Result {
  ColoringOutput output;  // fixed_at = phase
  RunMetrics metrics;
  Color palette_size = 0;  // ceil((1 + eps) Delta)
  std::uint32_t phase_budget = 0;
  std::uint32_t phases_used = 0;
  unsigned attempts = 0;
  std::uint64_t node_phases = 0;      // (active node, phase) pairs
  std::uint64_t node_successes = 0;   // of those, pairs that fixed a color
  std::uint64_t max_checks_per_node_phase = 0;
  bool flagged = false;
  std::string failure;
  std::vector<PolynomialHash> hashes;  // h_1..h_r of the last attempt
  ExecutionTrace trace;                // last attempt, when record_trace
};

/// max(1, ceil((1 + eps) Delta)), robust to floating error.
Color eps_palette_size(std::size_t max_degree, double eps);

/// ceil(8 ln n / eps), at least 1.
std::uint32_t eps_phase_budget(std::size_t n, double eps);

/// (1+eps)Delta coloring with shared hashes h_1..h_r. In phase i an active
/// node v proposes h_i(ID_v) + 1 and sends CHECK only to neighbors u with
/// h_j(ID_u) + 1 equal to the proposal for some j <= i; a neighbor answers
/// CONFLICT if it holds that color or proposes it in the same phase. v
/// keeps the color when nobody objects. Throws std::invalid_argument for
/// eps <= 0.
Alg2Result alg2_eps_delta(const Graph& g, const IdAssignment& ids, const Alg2Config& config,
                          std::uint64_t seed);

}  // namespace ktsim
