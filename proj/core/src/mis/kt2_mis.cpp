#include "ktsim/mis/kt2_mis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "ktsim/errors.hpp"
#include "ktsim/mis/greedy.hpp"
#include "ktsim/mis/luby.hpp"
#include "ktsim/mis/two_hop_tree.hpp"
#include "ktsim/random.hpp"
#include "ktsim/sim/engine.hpp"

namespace ktsim {

double sample_probability(std::size_t n, double c_sample) {
  if (n == 0) return 1.0;
  return std::min(1.0, c_sample / std::sqrt(static_cast<double>(n)));
}

namespace {

constexpr std::uint16_t kAnnounce = 40;

// Entrants announce themselves to all neighbors; a depth-1 vertex relays
// each announcement to its children in that entrant's tree, one message
// per edge per round, oldest first.
class Inform final : public Protocol {
 public:
  Inform(const Graph& g, const IdAssignment& ids, const std::vector<Vertex>& entrants)
      : n_(g.vertex_count()), entrant_(n_, 0), queues_(n_), known_(n_) {
    for (Vertex u : entrants) {
      entrant_[u] = 1;
      TwoHopTree t = build_two_hop_tree(g, ids, u);
      for (const auto& [x, w] : t.parent) relay_children_[{u, w}].push_back(x);
    }
  }

  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    if (ctx.round() == 1) {
      if (entrant_[v]) {
        ctx.send_all(Message::make(kAnnounce, 32).with_id(ctx.id()));
        ctx.halt();
      } else {
        ctx.sleep();
      }
      return;
    }
    for (const auto& e : ctx.inbox()) {
      const IdValue about = e.msg.ids[0];
      known_[v].push_back(about);
      auto it = relay_children_.find({e.src, v});
      if (it == relay_children_.end()) continue;
      for (Vertex x : it->second) queues_[v][x].push_back(about);
    }
    bool more = false;
    for (auto& [x, q] : queues_[v]) {
      if (q.empty()) continue;
      ctx.send(x, Message::make(kAnnounce, 32).with_id(q.front()));
      q.pop_front();
      more |= !q.empty();
    }
    if (!more) ctx.sleep();
  }

  std::uint64_t duplicates() const {
    std::uint64_t d = 0;
    for (auto k : known_) {
      std::sort(k.begin(), k.end());
      d += k.size() - static_cast<std::size_t>(std::unique(k.begin(), k.end()) - k.begin());
    }
    return d;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entrant_;
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> relay_children_;  // (entrant, relay) -> children
  std::vector<std::map<Vertex, std::deque<IdValue>>> queues_;               // per relay, per child edge
  std::vector<std::vector<IdValue>> known_;                                 // entrants heard of
};

}  // namespace

Alg3Result alg3_kt2_mis(const Graph& g, const IdAssignment& ids, const Alg3Config& config,
                        std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  Alg3Result res;
  res.output = MISOutput(n);

  // (1) private coins and ranks
  RankedSample s;
  s.member.assign(n, 0);
  s.rank.assign(n, 0);
  const double prob = sample_probability(n, config.c_sample);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng(mix_seed(mix_seed(seed, 0x5a), v));
    s.member[v] = uniform_unit(rng) < prob;
    s.rank[v] = rng();
    res.sample_size += s.member[v];
  }

  // (2) greedy MIS on S
  GreedyRun greedy = parallel_greedy_mis(g, ids, s, mix_seed(seed, 2), config.word_bits);
  res.metrics.absorb(greedy.metrics);
  res.greedy_rounds = greedy.metrics.rounds;
  std::vector<Vertex> entrants;
  for (Vertex v = 0; v < n; ++v)
    if (greedy.output.in[v]) entrants.push_back(v);
  res.greedy_entrants = entrants.size();

  // (3) two-hop informing
  if (!entrants.empty()) {
    Inform inform(g, ids, entrants);
    RunOptions opt;
    opt.rho = 2;
    opt.seed = mix_seed(seed, 3);
    opt.word_bits = config.word_bits;
    opt.audit_ids = config.audit_informing;
    try {
      RunResult r = run_synchronous(g, ids, inform, opt);
      res.metrics.absorb(r.metrics);
      res.inform_rounds = r.metrics.rounds;
    } catch (const AuditError& e) {
      res.audit_ok = false;
      res.audit_violation = e.what();
    }
    res.duplicate_deliveries = inform.duplicates();
  }

  // (4) local pruning: entrants and their neighbors are settled
  std::vector<std::uint8_t> remnant(n, 1);
  for (Vertex u : entrants) {
    res.output.in[u] = 1;
    res.output.cause[u] = MisCause::sampled_greedy;
    remnant[u] = 0;
    for (Vertex w : g.neighbors(u)) {
      remnant[w] = 0;
      res.output.cause[w] = MisCause::dominated;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!remnant[v]) continue;
    ++res.remnant_size;
    std::size_t d = 0;
    for (Vertex u : g.neighbors(v)) d += remnant[u];
    res.remnant_max_degree = std::max(res.remnant_max_degree, d);
  }

  // (5) Luby on the remnant
  if (res.remnant_size > 0) {
    LubyRun luby = luby_mis(g, ids, remnant, mix_seed(seed, 5), config.word_bits);
    res.metrics.absorb(luby.metrics);
    res.luby_rounds = luby.metrics.rounds;
    for (Vertex v = 0; v < n; ++v)
      if (remnant[v]) {
        res.output.in[v] = luby.output.in[v];
        res.output.cause[v] = luby.output.cause[v];
      }
  }
  return res;
}

}  // namespace ktsim
