#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "ktsim/errors.hpp"
#include "ktsim/graph/generators.hpp"
#include "ktsim/sim/broadcast.hpp"
#include "ktsim/sim/engine.hpp"
#include "ktsim/sim/trace.hpp"
#include "ktsim/sim/utilization.hpp"

using namespace ktsim;

namespace {

// Wraps a lambda as a node program.
class Lambda final : public Protocol {
 public:
  explicit Lambda(std::function<void(NodeContext&)> f) : f_(std::move(f)) {}
  void on_round(NodeContext& ctx) override { f_(ctx); }

 private:
  std::function<void(NodeContext&)> f_;
};

RunResult run(const Graph& g, const IdAssignment& ids, std::function<void(NodeContext&)> f, RunOptions opt = {}) {
  Lambda p(std::move(f));
  return run_synchronous(g, ids, p, opt);
}

// Every node sends a random word to each neighbor for three rounds.
void chatter(NodeContext& ctx) {
  for (Vertex u : ctx.neighbors()) ctx.send(u, Message::make(7, 16).with_word(ctx.rng()() & 0xffff));
  ctx.record_state(std::to_string(ctx.inbox().size()));
  if (ctx.round() == 3) {
    ctx.set_output(static_cast<std::int64_t>(ctx.rng()() % 100));
    ctx.halt();
  }
}

}  // namespace

TEST(Engine, EdgelessHaltImmediately) {
  const auto r = run(Graph(5), IdAssignment::identity(5), [](NodeContext& c) { c.halt(); });
  EXPECT_EQ(r.metrics.messages, 0u);
  EXPECT_EQ(r.metrics.rounds, 1u);
  EXPECT_EQ(r.termination, Termination::all_halted);
}

TEST(Engine, SingleEdgeOneBitEachWay) {
  RunOptions opt;
  opt.record_trace = true;
  const auto r = run(path_graph(2), IdAssignment::identity(2),
                     [](NodeContext& c) {
                       c.send_all(Message::make(1, 1));
                       c.halt();
                     },
                     opt);
  EXPECT_EQ(r.trace.envelopes.size(), 2u);
  EXPECT_EQ(r.metrics.messages, 2u);
  EXPECT_EQ(r.metrics.envelopes, 2u);
  EXPECT_EQ(r.metrics.utilized_edges, (std::vector<Edge>{{0, 1}}));
}

TEST(Engine, DeterministicDigest) {
  const Graph g = generate_random_graph(60, 0.1, 3);
  const auto ids = IdAssignment::random(60, 3);
  RunOptions opt;
  opt.record_trace = true;
  opt.seed = 99;
  const auto a = run(g, ids, chatter, opt);
  const auto b = run(g, ids, chatter, opt);
  EXPECT_EQ(trace_digest(a.trace), trace_digest(b.trace));
  opt.seed = 100;
  EXPECT_NE(trace_digest(a.trace), trace_digest(run(g, ids, chatter, opt).trace));
}

TEST(Engine, ModelViolationsAbort) {
  const Graph g = path_graph(3);
  const auto ids = IdAssignment::identity(3);
  EXPECT_THROW(run(g, ids, [](NodeContext& c) { c.send(c.self() == 0 ? 2 : 0, Message::make(1, 1)); }),
               ProgramError);
  EXPECT_THROW(run(g, ids, [](NodeContext& c) { c.send(c.self(), Message::make(1, 1)); }), ProgramError);
  Message m = Message::make(1, 1);
  m.with_id(1).with_id(2);
  EXPECT_THROW(m.with_id(3), ProgramError);
}

TEST(Engine, RoundLimitIsDistinct) {
  RunOptions opt;
  opt.round_limit = 5;
  const auto r = run(path_graph(2), IdAssignment::identity(2), [](NodeContext& c) { c.send_all(Message::make(1, 1)); },
                     opt);
  EXPECT_EQ(r.termination, Termination::round_limit);
  EXPECT_EQ(r.metrics.rounds, 5u);
  EXPECT_EQ(r.metrics.messages, 10u);
}

TEST(Engine, MailToHaltedNodesIsCountedButDropped) {
  std::vector<std::size_t> got(2, 0);
  const auto r = run(path_graph(2), IdAssignment::identity(2), [&](NodeContext& c) {
    got[c.self()] += c.inbox().size();
    if (c.self() == 0) {
      c.halt();
      return;
    }
    if (c.round() == 1) {
      c.send(0, Message::make(1, 1));
      return;
    }
    c.halt();
  });
  EXPECT_EQ(r.metrics.messages, 1u);
  EXPECT_EQ(got[0], 0u);
}

TEST(Engine, SleepersWakeOnMail) {
  std::vector<std::uint32_t> woke(3, 0);
  const auto r = run(path_graph(3), IdAssignment::identity(3), [&](NodeContext& c) {
    if (c.round() == 1 && c.self() != 0) {
      c.sleep();
      return;
    }
    if (!woke[c.self()]) woke[c.self()] = c.round();
    for (Vertex u : c.neighbors())
      if (u > c.self()) c.send(u, Message::make(1, 1));
    c.halt();
  });
  EXPECT_EQ(woke, (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(r.termination, Termination::all_halted);
}

TEST(Engine, QuiescentWhenEveryoneSleeps) {
  const auto r = run(path_graph(3), IdAssignment::identity(3), [](NodeContext& c) { c.sleep(); });
  EXPECT_EQ(r.termination, Termination::quiescent);
}

TEST(Engine, InboxOrderedBySender) {
  std::vector<Vertex> order;
  run(star_graph(5), IdAssignment::identity(5), [&](NodeContext& c) {
    if (c.round() == 1) {
      if (c.self() != 0) c.send(0, Message::make(1, 1));
      if (c.self() != 0) c.halt();
      return;
    }
    for (const auto& e : c.inbox()) order.push_back(e.src);
    c.halt();
  });
  EXPECT_EQ(order, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(Engine, IdAuditAcceptsForwardingRejectsFabrication) {
  const Graph g = path_graph(4);
  const auto ids = IdAssignment({10, 20, 30, 40});
  RunOptions opt;
  opt.audit_ids = true;
  // Round 1: everybody sends its own ID right; round 2: forward what arrived.
  auto forward = [](NodeContext& c) {
    if (c.round() == 1) {
      if (c.self() + 1 < 4) c.send(c.self() + 1, Message::make(1, 32).with_id(c.id()));
      return;
    }
    for (const auto& e : c.inbox())
      if (c.self() + 1 < 4) c.send(c.self() + 1, Message::make(1, 32).with_id(e.msg.ids[0]));
    c.halt();
  };
  EXPECT_NO_THROW(run(g, ids, forward, opt));
  auto fabricate = [](NodeContext& c) {
    if (c.self() == 0) c.send(1, Message::make(1, 32).with_id(c.id() + 1));
    c.halt();
  };
  EXPECT_THROW(run(g, ids, fabricate, opt), AuditError);
  // Vertex 0 may name vertex 2 only with two-hop knowledge.
  auto two_hop = [](NodeContext& c) {
    if (c.self() == 0) c.send(1, Message::make(1, 32).with_id(30));
    c.halt();
  };
  EXPECT_THROW(run(g, ids, two_hop, opt), AuditError);
  opt.rho = 2;
  EXPECT_NO_THROW(run(g, ids, two_hop, opt));
}

TEST(Engine, PerNodeStreamsIndependentOfOtherNodes) {
  // A node's random draws depend on (seed, vertex) only.
  std::vector<std::uint64_t> a(4), b(3);
  RunOptions opt;
  opt.seed = 5;
  run(Graph(4), IdAssignment::identity(4), [&](NodeContext& c) { a[c.self()] = c.rng()(), c.halt(); }, opt);
  run(Graph(3), IdAssignment::identity(3), [&](NodeContext& c) { b[c.self()] = c.rng()(), c.halt(); }, opt);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(a[v], b[v]);
}

TEST(Trace, CountMessages) {
  ExecutionTrace t;
  EXPECT_EQ(count_messages(t, 32), 0u);
  t.envelopes.push_back({0, 1, 1, Message::make(1, 10)});
  EXPECT_EQ(count_messages(t, 32), 1u);
  t.envelopes[0].msg.bits = 100;
  EXPECT_EQ(count_messages(t, 32), 4u);
  EXPECT_EQ(default_word_bits(1024), 32u);
  EXPECT_EQ(default_word_bits(std::size_t{1} << 20), 40u);
}

TEST(Trace, WordSplittingInEngine) {
  RunOptions opt;
  opt.word_bits = 32;
  const auto r = run(path_graph(2), IdAssignment::identity(2), [](NodeContext& c) {
    c.send_all(Message::make(1, 100));
    c.halt();
  }, opt);
  EXPECT_EQ(r.metrics.messages, 8u);
  EXPECT_EQ(r.metrics.envelopes, 2u);
}

TEST(Trace, DecodeReplacesIdsByVertices) {
  const auto ids = IdAssignment({7, 8, 9, 42});
  ExecutionTrace t;
  t.vertex_count = 4;
  t.rounds = 1;
  t.envelopes.push_back({0, 1, 1, Message::make(2, 32).with_id(42)});
  const auto d = decode_trace(t, ids);
  ASSERT_EQ(d.envelopes.size(), 1u);
  EXPECT_EQ(d.envelopes[0].id_vertices, (std::vector<Vertex>{3}));
  t.envelopes[0].msg.ids[0] = 43;
  EXPECT_THROW(decode_trace(t, ids), DecodeError);
}

TEST(Trace, DecodedEqualityUnderOrderIsomorphicIds) {
  // Same program, IDs shifted by a constant: decoded traces coincide.
  const Graph g = cycle_graph(6);
  const auto a = IdAssignment({0, 5, 2, 9, 4, 1});
  const auto b = IdAssignment({100, 105, 102, 109, 104, 101});
  RunOptions opt;
  opt.record_trace = true;
  auto prog = [](NodeContext& c) {
    if (c.round() == 1) {
      Vertex best = c.neighbors()[0];
      for (Vertex u : c.neighbors())
        if (c.id_of(u) < c.id_of(best)) best = u;
      c.send(best, Message::make(3, 32).with_id(c.id()));
      c.record_state("sent");
      return;
    }
    c.set_output(static_cast<std::int64_t>(c.inbox().size()));
    c.halt();
  };
  const auto ra = run(g, a, prog, opt);
  const auto rb = run(g, b, prog, opt);
  EXPECT_EQ(decode_trace(ra.trace, a), decode_trace(rb.trace, b));
  EXPECT_NE(trace_digest(ra.trace), trace_digest(rb.trace));
}

TEST(Trace, CsvExport) {
  ExecutionTrace t;
  t.envelopes.push_back({0, 1, 2, Message::make(5, 64).with_id(11).with_id(12)});
  std::ostringstream out;
  write_trace_csv(out, t);
  EXPECT_EQ(out.str(), "round,src,dst,bits,tag,id_fields\n2,0,1,64,5,11;12\n");
}

TEST(Utilization, ThreeClauseTriangle) {
  const Graph tri = complete_graph(3);  // a=0, b=1, c=2
  const auto ids = IdAssignment::identity(3);
  UtilizationTracker u(tri, ids);
  u.observe(0, 1, Message::make(1, 32).with_id(ids[2]));
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  ExecutionTrace t;
  t.envelopes.push_back({0, 1, 1, Message::make(1, 32).with_id(ids[2])});
  EXPECT_EQ(track_utilized_edges(tri, t, ids), u.edges());
}

TEST(Utilization, PlainMessageMarksOnlyItsEdge) {
  const Graph g = path_graph(4);
  const auto ids = IdAssignment::identity(4);
  ExecutionTrace t;
  EXPECT_TRUE(track_utilized_edges(g, t, ids).empty());
  t.envelopes.push_back({1, 2, 1, Message::make(1, 3)});
  EXPECT_EQ(track_utilized_edges(g, t, ids), (std::vector<Edge>{{1, 2}}));
}

TEST(Utilization, EngineMatchesOfflineAndBoundsMessagedEdges) {
  const Graph g = generate_random_graph(50, 0.15, 8);
  const auto ids = IdAssignment::random(50, 8);
  RunOptions opt;
  opt.record_trace = true;
  const auto r = run(g, ids, [](NodeContext& c) {
    if (c.round() == 1 && c.degree() > 0) {
      c.send(c.neighbors()[0], Message::make(1, 32).with_id(c.id_of(c.neighbors().back())));
    }
    c.halt();
  }, opt);
  EXPECT_EQ(r.metrics.utilized_edges, track_utilized_edges(g, r.trace, ids));
  std::set<Edge> messaged;
  for (const auto& e : r.trace.envelopes) messaged.insert(make_edge(e.src, e.dst));
  EXPECT_GE(r.metrics.utilized_edges.size(), messaged.size());
  EXPECT_GE(r.metrics.messages, messaged.size());
}

TEST(Metrics, AbsorbAddsAndUnites) {
  RunMetrics a, b;
  a.messages = 3, a.rounds = 2, a.utilized_edges = {{0, 1}, {2, 3}}, a.charged_messages = 5;
  b.messages = 4, b.rounds = 1, b.utilized_edges = {{0, 1}, {1, 2}}, b.charged_rounds = 7;
  a.absorb(b);
  EXPECT_EQ(a.messages, 7u);
  EXPECT_EQ(a.rounds, 3u);
  EXPECT_EQ(a.utilized_edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(a.charged_messages, 5u);
  EXPECT_EQ(a.charged_rounds, 7u);
}

TEST(Broadcast, OracleChargeFormula) {
  auto edges = complete_graph(100).edges();
  edges.resize(4000);
  const Graph g = Graph::from_edges(100, edges);
  const auto ids = IdAssignment::identity(100);
  EXPECT_EQ(log2_squared_ceil(100), 45u);
  const BroadcastService svc(g, ids, {BroadcastBackendConfig::Mode::accounted_oracle, 0.5, 1.0});
  const auto r = svc.broadcast(256, 1);
  EXPECT_EQ(r.metrics.charged_messages, 45000u);
  EXPECT_EQ(r.metrics.charged_rounds, 45u * (diameter(g) + 10));
  EXPECT_EQ(r.metrics.messages, 0u);
  EXPECT_EQ(r.bits.size(), 256u);
  const BroadcastService doubled(g, ids, {BroadcastBackendConfig::Mode::accounted_oracle, 0.5, 2.0});
  EXPECT_EQ(doubled.broadcast(1, 1).metrics.charged_messages, 90000u);
}

TEST(Broadcast, ZeroBitsCostNothingAndSeedsRepeat) {
  const Graph g = complete_graph(10);
  const auto ids = IdAssignment::identity(10);
  const BroadcastService svc(g, ids, {});
  const auto r = svc.broadcast(0, 3);
  EXPECT_EQ(r.bits.size(), 0u);
  EXPECT_EQ(r.metrics.charged_messages, 0u);
  EXPECT_EQ(svc.broadcast(100, 3).bits, svc.broadcast(100, 3).bits);
}

TEST(Broadcast, ConfigValidation) {
  EXPECT_THROW((BroadcastBackendConfig{BroadcastBackendConfig::Mode::flooding, 1.5, 1.0}.validate()),
               std::invalid_argument);
  EXPECT_THROW((BroadcastBackendConfig{BroadcastBackendConfig::Mode::flooding, 0.5, 0.5}.validate()),
               std::invalid_argument);
}

TEST(Broadcast, FloodingSendsTwoMessagesPerEdgeWord) {
  const Graph g = generate_random_graph(80, 0.1, 4);
  ASSERT_EQ(diameter(g) > 0, true);
  const auto ids = IdAssignment::identity(80);
  const BroadcastService svc(g, ids, {BroadcastBackendConfig::Mode::flooding, 0.5, 1.0}, 32);
  const auto r = svc.broadcast(100, 2);
  EXPECT_EQ(r.metrics.envelopes, 2 * g.edge_count());
  EXPECT_EQ(r.metrics.messages, 2 * g.edge_count() * 4);
  EXPECT_EQ(r.metrics.charged_messages, 0u);
  const auto d0 = bfs_distances(g, 0);
  EXPECT_EQ(r.metrics.rounds, *std::max_element(d0.begin(), d0.end()) + 1);
  EXPECT_LE(r.metrics.rounds, diameter(g) + 1);
  for (bool b : r.reached) EXPECT_TRUE(b);
}

TEST(Broadcast, FloodingFlagsUnreachedComponent) {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  const BroadcastService svc(g, IdAssignment::identity(5), {BroadcastBackendConfig::Mode::flooding, 0.5, 1.0});
  const auto r = svc.broadcast(8, 1);
  EXPECT_EQ(r.reached, (std::vector<bool>{true, true, true, false, false}));
}

TEST(Broadcast, FloodingAggregateIsRealConvergecast) {
  const Graph g = path_graph(6);
  const BroadcastService svc(g, IdAssignment::identity(6), {BroadcastBackendConfig::Mode::flooding, 0.5, 1.0});
  const auto m = svc.aggregate();
  // flood out (5) + echo back (5 messages of 64 bits = 2 words each) + result flood (2 * 5 * 2 words)
  EXPECT_EQ(m.envelopes, 5u + 5u + 10u);
  EXPECT_EQ(m.charged_messages, 0u);
}
