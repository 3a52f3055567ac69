#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "ktsim/errors.hpp"
#include "ktsim/graph/generators.hpp"
#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/graph/io.hpp"
#include "ktsim/graph/kt_view.hpp"
#include "ktsim/graph/lower_bound.hpp"

using namespace ktsim;

namespace {

// log P[Bin(n, 1/2) = k]
double log_binom_half(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) + n * std::log(0.5);
}

double binom_half_tail_below(int n, int k) {  // P[X < k]
  double s = 0;
  for (int i = 0; i < k; ++i) s += std::exp(log_binom_half(n, i));
  return s;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, AdjacencySortedAndConsistent) {
  const Graph g = Graph::from_edges(5, {{3, 0}, {0, 1}, {4, 0}, {2, 1}});
  ASSERT_EQ(g.edge_count(), 4u);
  const auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(n0.begin(), n0.end()), (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {1, 2}}));
}

TEST(Graph, InducedRenumbersInKeepOrder) {
  const Graph g = complete_graph(5);
  const std::vector<Vertex> keep{4, 1, 2};
  const Graph h = g.induced(keep);
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge_count(), 3u);
}

TEST(Graph, DiameterAndComponents) {
  EXPECT_EQ(diameter(path_graph(7)), 6u);
  EXPECT_EQ(diameter(cycle_graph(8)), 4u);
  EXPECT_EQ(diameter(complete_graph(6)), 1u);
  std::size_t count = 0;
  connected_components(Graph(4), &count);
  EXPECT_EQ(count, 4u);
  const auto d = bfs_distances(Graph::from_edges(3, {{0, 1}}), 0);
  EXPECT_EQ(d[2], kUnreached);
}

TEST(Generators, ZeroProbabilityIsEdgeless) {
  const Graph g = generate_random_graph(5, 0.0, 1);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Generators, FullProbabilityIsComplete) {
  const Graph g = generate_random_graph(4, 1.0, 7);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g, complete_graph(4));
}

TEST(Generators, EdgeCountWithinBinomialBounds) {
  // Oracle: both tails of Bin(4950, 1/2) outside [2000, 2950] are below 1e-9.
  constexpr int kPairs = 100 * 99 / 2;
  EXPECT_LT(binom_half_tail_below(kPairs, 2000), 1e-9);
  EXPECT_LT(binom_half_tail_below(kPairs, kPairs - 2950), 1e-9);  // symmetry: P[X > 2950]
  const Graph g = generate_random_graph(100, 0.5, 3);
  EXPECT_GE(g.edge_count(), 2000u);
  EXPECT_LE(g.edge_count(), 2950u);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(generate_random_graph(300, 0.2, 11), generate_random_graph(300, 0.2, 11));
  EXPECT_NE(generate_random_graph(300, 0.2, 11), generate_random_graph(300, 0.2, 12));
}

TEST(Generators, StructuredFamilies) {
  EXPECT_EQ(star_graph(6).degree(0), 5u);
  EXPECT_EQ(path_graph(6).edge_count(), 5u);
  EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
  EXPECT_EQ(complete_graph(7).edge_count(), 21u);
}

TEST(Ids, InjectiveAndWithinSpace) {
  EXPECT_THROW(IdAssignment({1, 1}), std::invalid_argument);
  EXPECT_THROW(IdAssignment({1, 5}, 5), std::invalid_argument);
  const auto ids = IdAssignment::random(500, 9);
  std::set<IdValue> seen(ids.values().begin(), ids.values().end());
  EXPECT_EQ(seen.size(), 500u);
  for (Vertex v = 0; v < 500; ++v) EXPECT_EQ(ids.vertex_of(ids[v]), v);
  EXPECT_FALSE(IdAssignment::identity(3).vertex_of(3).has_value());
}

TEST(GraphIo, RoundTripSortedAndTolerant) {
  std::istringstream in("# comment\n4 3\n\n2 1\n0 3\n# mid\n1 0\n");
  const Graph g = read_graph(in);
  std::ostringstream out;
  write_graph(out, g);
  EXPECT_EQ(out.str(), "4 3\n0 1\n0 3\n1 2\n");
}

TEST(GraphIo, RejectsMalformed) {
  std::istringstream bad_count("3 2\n0 1\n");
  EXPECT_THROW(read_graph(bad_count), ParseError);
  std::istringstream bad_vertex("3 1\n0 7\n");
  EXPECT_THROW(read_graph(bad_vertex), ParseError);
  std::istringstream loop("3 1\n1 1\n");
  EXPECT_THROW(read_graph(loop), ParseError);
}

TEST(KtView, PathRadiusOneAtMiddle) {
  const Graph g = path_graph(3);  // a=0, b=1, c=2
  const auto ids = IdAssignment::identity(3);
  const KTView v = kt_view(g, ids, 1, 1);
  EXPECT_EQ(v.known_ids.size(), 3u);
  EXPECT_EQ(v.known_adjacency.size(), 1u);
  EXPECT_TRUE(v.knows_adjacency(1));
}

TEST(KtView, PathRadiusTwoAtEnd) {
  const Graph g = path_graph(3);
  const KTView v = kt_view(g, IdAssignment::identity(3), 0, 2);
  EXPECT_EQ(v.known_ids.size(), 3u);
  EXPECT_TRUE(v.knows_adjacency(0));
  EXPECT_TRUE(v.knows_adjacency(1));
  EXPECT_FALSE(v.knows_adjacency(2));
}

TEST(KtView, RadiusZeroKnowsOnlyItself) {
  const KTView v = kt_view(complete_graph(5), IdAssignment::identity(5), 2, 0);
  EXPECT_EQ(v.known_ids.size(), 1u);
  EXPECT_TRUE(v.known_adjacency.empty());
}

TEST(KtView, MonotoneInRadius) {
  const Graph g = generate_random_graph(40, 0.08, 5);
  const auto ids = IdAssignment::random(40, 5);
  for (Vertex v = 0; v < 40; ++v)
    for (unsigned rho = 0; rho < 4; ++rho)
      EXPECT_TRUE(kt_view(g, ids, v, rho).subset_of(kt_view(g, ids, v, rho + 1)));
}

TEST(LowerBound, BaseGraphShapes) {
  EXPECT_THROW(build_base_graph(0), std::invalid_argument);
  const auto t1 = build_base_graph(1);
  EXPECT_EQ(t1.base.vertex_count(), 6u);
  EXPECT_EQ(t1.base.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
  EXPECT_EQ(build_base_graph(3).base.edge_count(), 36u);
  const auto t2 = build_base_graph(2);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(t2.base.degree(t2.y(i)), 4u);
    EXPECT_EQ(t2.base.degree(t2.x(i)), 2u);
  }
}

TEST(LowerBound, PhiWindowsAndIdentityOrder) {
  const auto inst = build_base_graph(2);
  const auto phi = assign_phi(inst, 0);
  EXPECT_EQ(std::vector<IdValue>(phi.values().begin(), phi.values().end()),
            (std::vector<IdValue>{0, 2, 20, 22, 40, 42}));
  const auto one = assign_phi(build_base_graph(1), 0);
  EXPECT_EQ(std::vector<IdValue>(one.values().begin(), one.values().end()), (std::vector<IdValue>{0, 10, 20}));
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const auto p = assign_phi(build_base_graph(5), seed);
    std::set<IdValue> seen;
    for (IdValue id : p.values()) {
      EXPECT_EQ(id % 2, 0u);
      seen.insert(id);
    }
    EXPECT_EQ(seen.size(), 15u);
  }
}

TEST(LowerBound, PhiPrimeExample) {
  const auto inst = build_base_graph(2);
  const auto phi = assign_phi(inst, 0);
  const auto pp = assign_phi_prime(inst, phi, inst.x(0), inst.y(0), inst.z(0));
  EXPECT_EQ(pp[inst.x(0)], 21u);
  EXPECT_EQ(pp[inst.y(0)], 41u);
  EXPECT_EQ(pp[inst.z(0)], 61u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_GE(pp[inst.z(i)], 61u);
    EXPECT_LE(pp[inst.z(i)], 65u);
  }
  EXPECT_THROW(assign_phi_prime(inst, phi, inst.y(0), inst.y(1), inst.z(0)), std::invalid_argument);
}

TEST(LowerBound, SwapsAndInvolution) {
  const auto pair = make_crossing_pair(2, Crossing{2, 4, 6});
  const auto& psi = pair.base.psi;
  const auto sx = make_swapped_assignment(pair.base, psi, SwapVariant::X, *pair.crossed.crossing);
  EXPECT_EQ(sx[2], 21u);
  EXPECT_EQ(sx[6], 20u);
  const auto sz = make_swapped_assignment(pair.base, psi, SwapVariant::Z, *pair.crossed.crossing);
  EXPECT_EQ(sz[4], 41u);
  EXPECT_EQ(sz[pair.base.prime(2)], 40u);
  EXPECT_EQ(make_swapped_assignment(pair.base, sx, SwapVariant::X, *pair.crossed.crossing), psi);
  EXPECT_EQ(make_swapped_assignment(pair.base, sz, SwapVariant::Z, *pair.crossed.crossing), psi);
}

TEST(LowerBound, CrossingPreservesDegreesAndEdgeCount) {
  const auto inst = build_base_graph(1);
  const auto c1 = cross_edges(inst, 1, 2, 3);
  EXPECT_TRUE(c1.crossed.has_edge(1, 4));
  EXPECT_TRUE(c1.crossed.has_edge(3, 2));
  EXPECT_FALSE(c1.crossed.has_edge(1, 2));
  EXPECT_FALSE(c1.crossed.has_edge(3, 4));
  EXPECT_THROW(cross_edges(inst, 0, 2, 3), std::invalid_argument);
  for (std::size_t t = 1; t <= 4; ++t) {
    const auto base = build_base_graph(t);
    for (const auto& c : enumerate_family(t)) {
      const auto x = cross_edges(base, c.y, c.z, c.x_prime);
      EXPECT_EQ(x.crossed.edge_count(), 4 * t * t);
      for (Vertex v = 0; v < 6 * t; ++v) EXPECT_EQ(x.crossed.degree(v), base.base.degree(v));
    }
  }
}

TEST(LowerBound, FamilySize) {
  EXPECT_EQ(enumerate_family(1).size(), 1u);
  EXPECT_EQ(enumerate_family(2).size(), 8u);
  EXPECT_EQ(enumerate_family(4).size(), 64u);
  const auto f = enumerate_family(3);
  std::set<std::tuple<Vertex, Vertex, Vertex>> distinct;
  for (const auto& c : f) distinct.emplace(c.y, c.z, c.x_prime);
  EXPECT_EQ(distinct.size(), 27u);
}
