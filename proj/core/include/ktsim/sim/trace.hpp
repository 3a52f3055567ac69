#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/sim/message.hpp"

namespace ktsim {

struct StateSnapshot {
  std::uint32_t round = 0;
  Vertex vertex = 0;
  std::string bytes;

  friend bool operator==(const StateSnapshot&, const StateSnapshot&) = default;
};

/// Everything observable about one run. Envelopes are kept in send order,
/// which is round-major.
struct ExecutionTrace {
  std::size_t vertex_count = 0;
  std::uint32_t rounds = 0;
  std::vector<Envelope> envelopes;
  std::vector<StateSnapshot> states;
  std::vector<std::optional<std::int64_t>> outputs;

  /// Envelopes of round r (1-based); empty past the end.
  std::vector<Envelope> round_envelopes(std::uint32_t r) const;
};

/// "round,src,dst,bits,tag,id_fields" lines, id_fields ';'-separated.
void write_trace_csv(std::ostream& out, const ExecutionTrace& trace);

/// FNV-1a over envelopes (including data words), states and outputs.
std::uint64_t trace_digest(const ExecutionTrace& trace);

/// Each envelope counts ceil(bits / word_bits). word_bits must be >= 1.
std::uint64_t count_messages(const ExecutionTrace& trace, unsigned word_bits);

/// max(32, ceil(2 log2 n)).
unsigned default_word_bits(std::size_t n);

struct DecodedEnvelope {
  std::uint32_t round = 0;
  Vertex src = 0;
  Vertex dst = 0;
  std::uint32_t bits = 0;
  std::uint16_t tag = 0;
  std::vector<Vertex> id_vertices;
  std::vector<std::uint64_t> words;

  auto operator<=>(const DecodedEnvelope&) const = default;
};

/// Trace with every ID field replaced by the vertex holding that ID.
/// Envelopes are sorted within each round so that equality of decoded
/// traces is equality of per-round message multisets.
struct DecodedTrace {
  std::uint32_t rounds = 0;
  std::vector<DecodedEnvelope> envelopes;
  std::vector<StateSnapshot> states;
  std::vector<std::optional<std::int64_t>> outputs;

  friend bool operator==(const DecodedTrace&, const DecodedTrace&) = default;
};

/// Throws DecodeError if an ID field is not assigned to any vertex.
DecodedTrace decode_trace(const ExecutionTrace& trace, const IdAssignment& ids);

/// Edges utilized by the trace: carrying an envelope, or joining an
/// endpoint to a vertex whose ID that endpoint sent or received.
std::vector<Edge> track_utilized_edges(const Graph& g, const ExecutionTrace& trace,
                                       const IdAssignment& ids);

}  // namespace ktsim
