#include "ktsim/mis/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "ktsim/sim/engine.hpp"

namespace ktsim {

MISOutput sequential_greedy_mis(const Graph& g, const IdAssignment& ids, const RankedSample& s) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (s.member[v]) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::pair(s.rank[a], ids[a]) > std::pair(s.rank[b], ids[b]);
  });
  MISOutput out(n);
  for (Vertex v : order) {
    auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return out.in[u] != 0; })) {
      out.cause[v] = MisCause::dominated;
    } else {
      out.in[v] = 1;
      out.cause[v] = MisCause::sampled_greedy;
    }
  }
  return out;
}

namespace {

constexpr std::uint16_t kRank = 20;
constexpr std::uint16_t kIn = 21;
constexpr std::uint16_t kOut = 22;

class ParallelGreedy final : public Protocol {
 public:
  ParallelGreedy(const Graph& g, const RankedSample& s, MISOutput& out)
      : s_(s), out_(out), peers_(g.vertex_count()), higher_(g.vertex_count(), 0) {}

  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    if (!s_.member[v]) {
      ctx.halt();
      return;
    }
    if (ctx.round() == 1 && ctx.degree() > 0) {
      ctx.send_all(Message::make(kRank, 64).with_word(s_.rank[v]));
      return;
    }
    const auto mine = std::pair(s_.rank[v], ctx.id());
    bool dominated = false;
    for (const auto& e : ctx.inbox()) {
      switch (e.msg.tag) {
        case kRank:
          peers_[v].emplace_back(e.src, e.msg.word());
          if (std::pair(e.msg.word(), ctx.id_of(e.src)) > mine) ++higher_[v];
          break;
        case kIn:
          dominated = true;
          break;
        case kOut:
          for (auto it = peers_[v].begin(); it != peers_[v].end(); ++it)
            if (it->first == e.src) {
              if (std::pair(it->second, ctx.id_of(e.src)) > mine) --higher_[v];
              peers_[v].erase(it);
              break;
            }
          break;
      }
    }
    if (dominated) {
      out_.cause[v] = MisCause::dominated;
      ctx.set_output(0);
      for (const auto& [u, rank] : peers_[v]) ctx.send(u, Message::make(kOut, 1));
      ctx.halt();
    } else if (higher_[v] == 0) {
      out_.in[v] = 1;
      out_.cause[v] = MisCause::sampled_greedy;
      ctx.set_output(1);
      for (const auto& [u, rank] : peers_[v]) ctx.send(u, Message::make(kIn, 1));
      ctx.halt();
    }
  }

 private:
  const RankedSample& s_;
  MISOutput& out_;
  std::vector<std::vector<std::pair<Vertex, std::uint64_t>>> peers_;  // undecided S-neighbors, rank
  std::vector<std::uint32_t> higher_;
};

}  // namespace

GreedyRun parallel_greedy_mis(const Graph& g, const IdAssignment& ids, const RankedSample& s,
                              std::uint64_t seed, unsigned word_bits) {
  GreedyRun r;
  r.output = MISOutput(g.vertex_count());
  ParallelGreedy prog(g, s, r.output);
  RunOptions opt;
  opt.seed = seed;
  opt.word_bits = word_bits;
  r.metrics = run_synchronous(g, ids, prog, opt).metrics;
  return r;
}

}  // namespace ktsim
