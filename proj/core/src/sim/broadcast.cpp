#include "ktsim/sim/broadcast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ktsim/sim/engine.hpp"

namespace ktsim {

void BroadcastBackendConfig::validate() const {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("broadcast: delta outside [0, 1]");
  if (!(polylog_factor >= 1.0)) throw std::invalid_argument("broadcast: polylog_factor must be >= 1");
}

std::uint64_t log2_squared_ceil(std::size_t n) {
  if (n <= 1) return 0;
  const double l = std::log2(static_cast<double>(n));
  return static_cast<std::uint64_t>(std::ceil(l * l - 1e-9));
}

namespace {

constexpr std::uint16_t kFlood = 1;
constexpr std::uint16_t kEcho = 2;

Vertex min_id_vertex(const IdAssignment& ids) {
  Vertex best = 0;
  for (Vertex v = 1; v < ids.size(); ++v)
    if (ids[v] < ids[best]) best = v;
  return best;
}

// Leader floods `bits`; every node forwards once to all neighbors and halts.
class Flood final : public Protocol {
 public:
  Flood(Vertex leader, std::uint32_t bits, std::size_t n) : leader_(leader), bits_(bits), got_(n, false) {}
  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    if (ctx.round() == 1 && v != leader_) {
      ctx.sleep();
      return;
    }
    got_[v] = true;
    ctx.send_all(Message::make(kFlood, bits_));
    ctx.halt();
  }
  std::vector<bool> got() const { return got_; }

 private:
  Vertex leader_;
  std::uint32_t bits_;
  std::vector<bool> got_;
};

// Flood a request, echo one word back along the BFS tree of first arrivals.
class FloodEcho final : public Protocol {
 public:
  FloodEcho(Vertex leader, std::size_t n) : leader_(leader), parent_(n, kNone), pending_(n, 0) {}
  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    if (ctx.round() == 1) {
      if (v != leader_) {
        ctx.sleep();
        return;
      }
      parent_[v] = v;
      pending_[v] = static_cast<std::uint32_t>(ctx.degree());
      ctx.send_all(Message::make(kFlood, 1));
      if (pending_[v] == 0) ctx.halt();
      return;
    }
    for (const auto& e : ctx.inbox()) {
      if (e.msg.tag == kFlood) {
        if (parent_[v] == kNone) {
          parent_[v] = e.src;
          for (Vertex u : ctx.neighbors())
            if (u != e.src) ctx.send(u, Message::make(kFlood, 1));
          pending_[v] = static_cast<std::uint32_t>(ctx.degree() - 1);
        } else {
          // non-tree edge: the flood from the other side counts as its echo
          --pending_[v];
        }
      } else {
        --pending_[v];
      }
    }
    if (parent_[v] != kNone && pending_[v] == 0) {
      if (v != leader_) ctx.send(parent_[v], Message::make(kEcho, 64));
      ctx.halt();
    } else {
      ctx.sleep();
    }
  }

 private:
  static constexpr Vertex kNone = ~Vertex{0};
  Vertex leader_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> pending_;
};

}  // namespace

BroadcastService::BroadcastService(const Graph& g, const IdAssignment& ids, BroadcastBackendConfig config,
                                   unsigned word_bits)
    : g_(g), ids_(ids), config_(config), word_bits_(word_bits ? word_bits : default_word_bits(g.vertex_count())) {
  config_.validate();
  diameter_ = ktsim::diameter(g);
}

std::uint64_t BroadcastService::charged_messages() const {
  const double n = static_cast<double>(g_.vertex_count());
  const auto dense = static_cast<std::uint64_t>(std::ceil(std::pow(n, 1.0 + config_.delta) - 1e-9));
  const std::uint64_t base = log2_squared_ceil(g_.vertex_count()) * std::min<std::uint64_t>(g_.edge_count(), dense);
  return static_cast<std::uint64_t>(std::ceil(config_.polylog_factor * static_cast<double>(base) - 1e-9));
}

std::uint64_t BroadcastService::charged_rounds() const {
  const double n = static_cast<double>(g_.vertex_count());
  const auto sparse = static_cast<std::uint64_t>(std::ceil(std::pow(n, 1.0 - config_.delta) - 1e-9));
  const std::uint64_t base = log2_squared_ceil(g_.vertex_count()) * (diameter_ + sparse);
  return static_cast<std::uint64_t>(std::ceil(config_.polylog_factor * static_cast<double>(base) - 1e-9));
}

BroadcastResult BroadcastService::broadcast(std::size_t bit_count, std::uint64_t seed) const {
  BroadcastResult out;
  out.bits = BitString::random(bit_count, seed);
  out.reached.assign(g_.vertex_count(), true);
  if (bit_count == 0 || g_.vertex_count() == 0) return out;
  if (config_.mode == BroadcastBackendConfig::Mode::accounted_oracle) {
    out.metrics.charged_messages = charged_messages();
    out.metrics.charged_rounds = charged_rounds();
    return out;
  }
  Flood flood(min_id_vertex(ids_), static_cast<std::uint32_t>(bit_count), g_.vertex_count());
  RunOptions opt;
  opt.word_bits = word_bits_;
  RunResult r = run_synchronous(g_, ids_, flood, opt);
  out.metrics = std::move(r.metrics);
  out.reached = flood.got();
  return out;
}

RunMetrics BroadcastService::aggregate() const {
  RunMetrics m;
  if (g_.vertex_count() <= 1) return m;
  if (config_.mode == BroadcastBackendConfig::Mode::accounted_oracle) {
    m.charged_messages = charged_messages();
    m.charged_rounds = charged_rounds();
    return m;
  }
  FloodEcho echo(min_id_vertex(ids_), g_.vertex_count());
  RunOptions opt;
  opt.word_bits = word_bits_;
  m = run_synchronous(g_, ids_, echo, opt).metrics;
  Flood flood(min_id_vertex(ids_), 64, g_.vertex_count());
  m.absorb(run_synchronous(g_, ids_, flood, opt).metrics);
  return m;
}

}  // namespace ktsim
