#pragma once

#include <cstdint>
#include <string>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/mis/mis.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

struct Alg3Config {
  double c_sample = 2.0;
  unsigned word_bits = 0;
  /// Run the informing stage under the ID audit and record the outcome.
  bool audit_informing = true;
};

struct Alg3Result {
  MISOutput output;
  RunMetrics metrics;
  std::size_t sample_size = 0;       // |S|
  std::size_t greedy_entrants = 0;
  std::size_t remnant_size = 0;
  std::size_t remnant_max_degree = 0;
  std::uint64_t greedy_rounds = 0, inform_rounds = 0, luby_rounds = 0;
  std::uint64_t duplicate_deliveries = 0;  // (entrant, recipient) pairs informed twice
  bool audit_ok = true;
  std::string audit_violation;
};

/// min(1, c / sqrt(n)).
double sample_probability(std::size_t n, double c_sample);

/// KT-2 MIS: sample S, run the parallel greedy MIS on S, have every entrant
/// inform its 2-hop neighborhood over its two-hop tree (relays serialized
/// one message per edge per round), prune locally, finish with Luby on the
/// remnant.
Alg3Result alg3_kt2_mis(const Graph& g, const IdAssignment& ids, const Alg3Config& config,
                        std::uint64_t seed);

}  // namespace ktsim
