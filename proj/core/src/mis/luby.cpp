#include "ktsim/mis/luby.hpp"

#include <algorithm>

#include "ktsim/sim/engine.hpp"

namespace ktsim {

namespace {

constexpr std::uint16_t kMark = 30;
constexpr std::uint16_t kIn = 31;
constexpr std::uint16_t kOut = 32;

class Luby final : public Protocol {
 public:
  Luby(const Graph& g, const std::vector<std::uint8_t>& participate, MISOutput& out)
      : participate_(participate), out_(out), active_(g.vertex_count()), mark_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (participate[v])
        for (Vertex u : g.neighbors(v))
          if (participate[u]) active_[v].push_back(u);
  }

  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    if (!participate_[v]) {
      ctx.halt();
      return;
    }
    auto& act = active_[v];
    if (ctx.round() % 2 == 1) {
      bool dominated = false;
      for (const auto& e : ctx.inbox()) {
        if (e.msg.tag == kIn) dominated = true;
        if (e.msg.tag == kIn || e.msg.tag == kOut) std::erase(act, e.src);
      }
      if (dominated) {
        out_.cause[v] = MisCause::dominated;
        for (Vertex u : act) ctx.send(u, Message::make(kOut, 1));
        ctx.set_output(0);
        ctx.halt();
        return;
      }
      if (act.empty()) {
        enter(ctx);
        return;
      }
      mark_[v] = ctx.rng()();
      for (Vertex u : act) ctx.send(u, Message::make(kMark, 64).with_word(mark_[v]));
      return;
    }
    const auto mine = std::pair(mark_[v], ctx.id());
    bool best = true;
    for (const auto& e : ctx.inbox()) {
      if (e.msg.tag == kOut) std::erase(act, e.src);
      if (e.msg.tag == kMark && std::pair(e.msg.word(), ctx.id_of(e.src)) > mine) best = false;
    }
    if (best) enter(ctx);
  }

 private:
  void enter(NodeContext& ctx) {
    const Vertex v = ctx.self();
    out_.in[v] = 1;
    out_.cause[v] = MisCause::luby;
    for (Vertex u : active_[v]) ctx.send(u, Message::make(kIn, 1));
    ctx.set_output(1);
    ctx.halt();
  }

  const std::vector<std::uint8_t>& participate_;
  MISOutput& out_;
  std::vector<std::vector<Vertex>> active_;
  std::vector<std::uint64_t> mark_;
};

}  // namespace

LubyRun luby_mis(const Graph& g, const IdAssignment& ids, const std::vector<std::uint8_t>& participate,
                 std::uint64_t seed, unsigned word_bits) {
  LubyRun r;
  r.output = MISOutput(g.vertex_count());
  Luby prog(g, participate, r.output);
  RunOptions opt;
  opt.seed = seed;
  opt.word_bits = word_bits;
  r.metrics = run_synchronous(g, ids, prog, opt).metrics;
  return r;
}

LubyRun luby_mis(const Graph& g, std::uint64_t seed) {
  return luby_mis(g, IdAssignment::identity(g.vertex_count()),
                  std::vector<std::uint8_t>(g.vertex_count(), 1), seed);
}

}  // namespace ktsim
