#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/random.hpp"
#include "ktsim/sim/message.hpp"
#include "ktsim/sim/metrics.hpp"
#include "ktsim/sim/trace.hpp"

namespace ktsim {

class Engine;

/// What a node program sees of itself and the network in one round.
class NodeContext {
 public:
  Vertex self() const { return v_; }
  IdValue id() const;
  std::uint32_t round() const;
  std::span<const Vertex> neighbors() const;
  std::size_t degree() const { return neighbors().size(); }

  /// ID of a vertex inside this node's initial view (not checked here; the
  /// ID audit catches programs that leak IDs they could not know).
  IdValue id_of(Vertex u) const;

  /// Messages delivered at the start of this round, ordered by sender.
  std::span<const Envelope> inbox() const;

  /// Throws ProgramError for self-messages and non-edges.
  void send(Vertex dst, const Message& msg);
  void send_all(const Message& msg);

  /// Stop for good; later messages to this node are dropped.
  void halt();
  /// Skip rounds until a message arrives.
  void sleep();

  /// Private random stream, a function of (run seed, vertex) only.
  Rng& rng();

  void record_state(std::string bytes);
  void set_output(std::int64_t value);

 private:
  friend class Engine;
  NodeContext(Engine& e, Vertex v) : e_(&e), v_(v) {}
  Engine* e_;
  Vertex v_;
};

/// A node program. One object drives every node; it must keep per-node
/// state indexed by ctx.self() and touch no other node's state.
class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual void on_round(NodeContext& ctx) = 0;
};

enum class Termination { all_halted, quiescent, round_limit };

const char* termination_name(Termination t);

struct RunOptions {
  unsigned rho = 1;
  std::uint64_t seed = 0;
  std::uint64_t round_limit = 1u << 20;
  unsigned word_bits = 0;  // 0: default_word_bits(n)
  bool record_trace = false;
  /// Abort with AuditError when a node sends an ID that is neither in its
  /// initial rho-view nor previously received.
  bool audit_ids = false;
};

struct RunResult {
  ExecutionTrace trace;  // envelopes/states only when record_trace
  RunMetrics metrics;
  Termination termination = Termination::all_halted;
};

/// Lockstep rounds: deliver, compute, send. Nodes are evaluated in vertex
/// order but nothing observable depends on that order.
RunResult run_synchronous(const Graph& g, const IdAssignment& ids, Protocol& program,
                          const RunOptions& options);

class Engine {
 public:
  Engine(const Graph& g, const IdAssignment& ids, const RunOptions& options);
  RunResult run(Protocol& program);

 private:
  friend class NodeContext;
  enum class Status : std::uint8_t { active, sleeping, halted };

  void send(Vertex src, Vertex dst, const Message& msg);
  void audit(Vertex src, const Message& msg);
  bool knows_initially(Vertex v, Vertex w) const;

  const Graph& g_;
  const IdAssignment& ids_;
  RunOptions opt_;
  unsigned word_bits_;
  std::uint32_t round_ = 0;

  std::vector<Status> status_;
  std::vector<std::unique_ptr<Rng>> rngs_;
  std::vector<Envelope> outgoing_;
  std::vector<Envelope> inbox_flat_;
  std::vector<std::size_t> inbox_off_;
  std::vector<std::vector<IdValue>> received_ids_;  // audit only, kept sorted

  RunResult result_;
  std::unique_ptr<class UtilizationTracker> util_;
};

}  // namespace ktsim
