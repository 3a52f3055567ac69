#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktsim/graph/lower_bound.hpp"
#include "ktsim/lb/programs.hpp"
#include "ktsim/sim/metrics.hpp"
#include "ktsim/sim/trace.hpp"

namespace ktsim::lb {

struct Divergence {
  std::uint32_t round = 0;  // 0 = final outputs
  std::string what;
};

struct SimilarityReport {
  bool similar = true;
  std::optional<Divergence> first_divergence;
};

/// Compares decoded per-round message multisets, state snapshots and final
/// outputs. Traces of different length are compared as if the shorter one
/// had empty trailing rounds.
SimilarityReport check_similarity(const ExecutionTrace& a, const ExecutionTrace& b, const IdAssignment& ids_a,
                                  const IdAssignment& ids_b);
SimilarityReport check_similarity(const ExecutionTrace& a, const ExecutionTrace& b, const IdAssignment& ids);

struct CrossingReport {
  std::size_t t = 0;
  Crossing crossing;
  SimilarityReport similarity;
  bool e_utilized = false;    // {y, z} in the base run
  bool ep_utilized = false;   // {x', y'} in the base run
  bool crossed_new_edges_used = false;  // any message over {y, y'} or {x', z} in the crossed run
  RunMetrics base_metrics;
  ExecutionTrace base_trace;
  ExecutionTrace crossed_trace;
  std::vector<std::int64_t> base_output;
  std::vector<std::int64_t> crossed_output;
};

/// Runs the fixture on (G u G', psi) and on (G_{e,e'}, psi) with the same
/// seed, under the ID audit (AuditError propagates).
CrossingReport run_crossing_experiment(std::size_t t, const Crossing& crossing, Fixture program,
                                       std::uint64_t seed);

enum class Conclusion { violation, no_violation, inconclusive };

struct IncorrectnessVerdict {
  Conclusion conclusion = Conclusion::inconclusive;
  std::string kind;    // "mono_y_y'", "mis_y_y'", "mis_x'_z" or ""
  std::string reason;  // why inconclusive
  CrossingReport report;
};

/// Requires an MIS fixture. Conclusive only if {e, e'} are unutilized in the
/// base run and the base output is an MIS of G u G'.
IncorrectnessVerdict audit_mis_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                             std::uint64_t seed);

/// Coloring analogue: conclusive only if {e, e'} are unutilized and the base
/// output is a proper coloring with at most Delta + 1 colors.
IncorrectnessVerdict audit_coloring_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                                  std::uint64_t seed);

/// Verdict matching the fixture's output kind; inconclusive for programs
/// without a checkable output.
IncorrectnessVerdict audit_incorrectness(std::size_t t, const Crossing& crossing, Fixture program,
                                         std::uint64_t seed);

/// First crossing (enumeration order) whose e and e' are both unutilized
/// in the base run under that crossing's psi.
std::optional<CrossingReport> scan_family_for_unutilized_pair(std::size_t t, Fixture program, std::uint64_t seed);

/// "t,y,z,x_prime,e_utilized,ep_utilized,similar,violation_kind"
void write_harness_header(std::ostream& out);
void write_harness_row(std::ostream& out, const IncorrectnessVerdict& v);

}  // namespace ktsim::lb
