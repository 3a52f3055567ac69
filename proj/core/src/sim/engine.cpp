#include "ktsim/sim/engine.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "ktsim/errors.hpp"
#include "ktsim/sim/utilization.hpp"

namespace ktsim {

void RunMetrics::absorb(const RunMetrics& later) {
  messages += later.messages;
  envelopes += later.envelopes;
  rounds += later.rounds;
  charged_messages += later.charged_messages;
  charged_rounds += later.charged_rounds;
  if (later.utilized_edges.empty()) return;
  std::vector<Edge> merged;
  merged.reserve(utilized_edges.size() + later.utilized_edges.size());
  std::set_union(utilized_edges.begin(), utilized_edges.end(), later.utilized_edges.begin(),
                 later.utilized_edges.end(), std::back_inserter(merged));
  utilized_edges = std::move(merged);
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::all_halted: return "all_halted";
    case Termination::quiescent: return "quiescent";
    case Termination::round_limit: return "round_limit";
  }
  return "?";
}

IdValue NodeContext::id() const { return e_->ids_[v_]; }
std::uint32_t NodeContext::round() const { return e_->round_; }
std::span<const Vertex> NodeContext::neighbors() const { return e_->g_.neighbors(v_); }
IdValue NodeContext::id_of(Vertex u) const { return e_->ids_[u]; }

std::span<const Envelope> NodeContext::inbox() const {
  return {e_->inbox_flat_.data() + e_->inbox_off_[v_], e_->inbox_flat_.data() + e_->inbox_off_[v_ + 1]};
}

void NodeContext::send(Vertex dst, const Message& msg) { e_->send(v_, dst, msg); }

void NodeContext::send_all(const Message& msg) {
  for (Vertex u : neighbors()) e_->send(v_, u, msg);
}

void NodeContext::halt() { e_->status_[v_] = Engine::Status::halted; }

void NodeContext::sleep() {
  if (e_->status_[v_] == Engine::Status::active) e_->status_[v_] = Engine::Status::sleeping;
}

Rng& NodeContext::rng() {
  auto& slot = e_->rngs_[v_];
  if (!slot) slot = std::make_unique<Rng>(mix_seed(e_->opt_.seed, v_));
  return *slot;
}

void NodeContext::record_state(std::string bytes) {
  if (e_->opt_.record_trace) e_->result_.trace.states.push_back({e_->round_, v_, std::move(bytes)});
}

void NodeContext::set_output(std::int64_t value) { e_->result_.trace.outputs[v_] = value; }

Engine::Engine(const Graph& g, const IdAssignment& ids, const RunOptions& options)
    : g_(g), ids_(ids), opt_(options) {
  if (ids.size() != g.vertex_count())
    throw std::invalid_argument("run_synchronous: ID assignment size differs from vertex count");
  if (opt_.round_limit == 0) throw std::invalid_argument("run_synchronous: round_limit must be >= 1");
  word_bits_ = opt_.word_bits ? opt_.word_bits : default_word_bits(g.vertex_count());
}

bool Engine::knows_initially(Vertex v, Vertex w) const {
  if (v == w) return true;
  if (opt_.rho == 0) return false;
  // BFS ball of radius rho around v, small graphs only (audit mode).
  std::vector<std::uint32_t> dist(g_.vertex_count(), kUnreached);
  std::vector<Vertex> frontier{v};
  dist[v] = 0;
  for (unsigned d = 1; d <= opt_.rho && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex x : g_.neighbors(u))
        if (dist[x] == kUnreached) {
          if (x == w) return true;
          dist[x] = d;
          next.push_back(x);
        }
    frontier = std::move(next);
  }
  return false;
}

void Engine::audit(Vertex src, const Message& msg) {
  for (IdValue id : msg.id_fields()) {
    const auto& got = received_ids_[src];
    if (std::binary_search(got.begin(), got.end(), id)) continue;
    auto w = ids_.vertex_of(id);
    if (w && knows_initially(src, *w)) continue;
    throw AuditError(fmt::format("round {}: vertex {} sent ID {} it never knew or received", round_, src, id));
  }
}

void Engine::send(Vertex src, Vertex dst, const Message& msg) {
  if (src == dst) throw ProgramError(fmt::format("vertex {} sent a message to itself", src));
  if (!g_.has_edge(src, dst))
    throw ProgramError(fmt::format("round {}: vertex {} sent along non-edge to {}", round_, src, dst));
  if (msg.bits == 0) throw ProgramError("message with zero payload bits");
  if (opt_.audit_ids) audit(src, msg);
  outgoing_.push_back({src, dst, round_, msg});
  result_.metrics.envelopes += 1;
  result_.metrics.messages += (msg.bits + word_bits_ - 1) / word_bits_;
  util_->observe(src, dst, msg);
}

RunResult Engine::run(Protocol& program) {
  const std::size_t n = g_.vertex_count();
  status_.assign(n, Status::active);
  rngs_.clear();
  rngs_.resize(n);
  received_ids_.assign(opt_.audit_ids ? n : 0, {});
  inbox_off_.assign(n + 1, 0);
  inbox_flat_.clear();
  outgoing_.clear();
  result_ = RunResult{};
  result_.trace.vertex_count = n;
  result_.trace.outputs.assign(n, std::nullopt);
  util_ = std::make_unique<UtilizationTracker>(g_, ids_);

  Termination how = Termination::round_limit;
  for (round_ = 1; round_ <= opt_.round_limit; ++round_) {
    // deliver what was sent last round; mail to halted nodes is dropped
    inbox_off_.assign(n + 1, 0);
    for (const auto& e : outgoing_)
      if (status_[e.dst] != Status::halted) ++inbox_off_[e.dst + 1];
    for (std::size_t v = 0; v < n; ++v) inbox_off_[v + 1] += inbox_off_[v];
    inbox_flat_.resize(inbox_off_[n]);
    {
      std::vector<std::size_t> fill(inbox_off_.begin(), inbox_off_.end() - 1);
      for (auto& e : outgoing_) {
        if (status_[e.dst] == Status::halted) continue;
        if (opt_.audit_ids) {
          auto& got = received_ids_[e.dst];
          for (IdValue id : e.msg.id_fields()) got.insert(std::upper_bound(got.begin(), got.end(), id), id);
        }
        inbox_flat_[fill[e.dst]++] = e;
      }
    }
    if (opt_.record_trace)
      result_.trace.envelopes.insert(result_.trace.envelopes.end(), outgoing_.begin(), outgoing_.end());
    outgoing_.clear();

    for (Vertex v = 0; v < n; ++v) {
      if (status_[v] == Status::halted) continue;
      if (status_[v] == Status::sleeping) {
        if (inbox_off_[v] == inbox_off_[v + 1]) continue;
        status_[v] = Status::active;
      }
      NodeContext ctx(*this, v);
      program.on_round(ctx);
    }

    bool all_halted = true, any_active = false, pending = false;
    for (Vertex v = 0; v < n; ++v) {
      all_halted &= status_[v] == Status::halted;
      any_active |= status_[v] == Status::active;
    }
    for (const auto& e : outgoing_)
      if (status_[e.dst] != Status::halted) {
        pending = true;
        break;
      }
    if (all_halted) {
      how = Termination::all_halted;
      break;
    }
    if (!any_active && !pending) {
      how = Termination::quiescent;
      break;
    }
  }
  const std::uint32_t last = std::min<std::uint64_t>(round_, opt_.round_limit);
  if (opt_.record_trace)
    result_.trace.envelopes.insert(result_.trace.envelopes.end(), outgoing_.begin(), outgoing_.end());
  outgoing_.clear();
  result_.trace.rounds = last;
  result_.metrics.rounds = last;
  result_.metrics.utilized_edges = util_->edges();
  result_.termination = how;
  return std::move(result_);
}

RunResult run_synchronous(const Graph& g, const IdAssignment& ids, Protocol& program,
                          const RunOptions& options) {
  Engine engine(g, ids, options);
  return engine.run(program);
}

}  // namespace ktsim
