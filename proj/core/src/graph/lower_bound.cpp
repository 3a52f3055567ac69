#include "ktsim/graph/lower_bound.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ktsim/random.hpp"

namespace ktsim {

std::string_view part_name(Part p) {
  switch (p) {
    case Part::X: return "X";
    case Part::Y: return "Y";
    case Part::Z: return "Z";
    case Part::Xp: return "X'";
    case Part::Yp: return "Y'";
    case Part::Zp: return "Z'";
  }
  return "?";
}

LowerBoundInstance build_base_graph(std::size_t t) {
  if (t == 0) throw std::invalid_argument("build_base_graph: t must be >= 1");
  LowerBoundInstance inst;
  inst.t = t;
  std::vector<Edge> edges;
  edges.reserve(4 * t * t);
  for (std::size_t copy = 0; copy < 2; ++copy) {
    const auto off = static_cast<Vertex>(copy * 3 * t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        edges.push_back(make_edge(off + inst.x(i), off + inst.y(j)));
        edges.push_back(make_edge(off + inst.y(i), off + inst.z(j)));
      }
  }
  inst.base = Graph::from_edges(6 * t, std::move(edges));
  inst.part_labels.resize(6 * t);
  for (Vertex v = 0; v < 6 * t; ++v) inst.part_labels[v] = static_cast<Part>(v / t);
  return inst;
}

IdAssignment assign_phi(const LowerBoundInstance& inst, std::uint64_t seed) {
  const std::size_t t = inst.t;
  std::vector<IdValue> ids(3 * t);
  Rng rng(mix_seed(seed, 0xf1));
  const IdValue window_start[3] = {0, 10 * t, 20 * t};
  for (std::size_t layer = 0; layer < 3; ++layer) {
    std::vector<std::size_t> slot(t);
    std::iota(slot.begin(), slot.end(), std::size_t{0});
    if (seed != 0)
      for (std::size_t i = t; i > 1; --i) std::swap(slot[i - 1], slot[uniform_below(rng, i)]);
    for (std::size_t i = 0; i < t; ++i) ids[layer * t + i] = window_start[layer] + 2 * slot[i];
  }
  return IdAssignment(std::move(ids), 40 * t);
}

IdAssignment assign_phi_prime(const LowerBoundInstance& inst, const IdAssignment& phi, Vertex x,
                              Vertex y, Vertex z) {
  const std::size_t t = inst.t;
  if (inst.part(x) != Part::X || inst.part(y) != Part::Y || inst.part(z) != Part::Z)
    throw std::invalid_argument("assign_phi_prime: x, y, z must lie in X, Y, Z");
  const IdValue shift[3] = {phi[y] - phi[x] + 1, phi[z] - phi[y] + 1, 10 * t + 1};
  std::vector<IdValue> ids(3 * t);
  for (Vertex v = 0; v < 3 * t; ++v) ids[v] = phi[v] + shift[v / t];
  return IdAssignment(std::move(ids), 40 * t);
}

IdAssignment combine_psi(const LowerBoundInstance& inst, const IdAssignment& phi,
                         const IdAssignment& phi_prime) {
  std::vector<IdValue> ids(phi.values().begin(), phi.values().end());
  ids.insert(ids.end(), phi_prime.values().begin(), phi_prime.values().end());
  return IdAssignment(std::move(ids), 40 * inst.t);
}

IdAssignment make_swapped_assignment(const LowerBoundInstance& inst, const IdAssignment& psi,
                                     SwapVariant variant, const Crossing& crossing) {
  std::vector<IdValue> ids(psi.values().begin(), psi.values().end());
  if (variant == SwapVariant::X)
    std::swap(ids[crossing.x_prime], ids[crossing.y]);
  else
    std::swap(ids[inst.prime(crossing.y)], ids[crossing.z]);
  return IdAssignment(std::move(ids), psi.space());
}

LowerBoundInstance cross_edges(const LowerBoundInstance& inst, Vertex y, Vertex z, Vertex x_prime) {
  const Vertex y_prime = inst.prime(y);
  if (y >= inst.base.vertex_count() || z >= inst.base.vertex_count() ||
      x_prime >= inst.base.vertex_count() || inst.part(y) != Part::Y ||
      inst.part(z) != Part::Z || inst.part(x_prime) != Part::Xp ||
      !inst.base.has_edge(y, z) || !inst.base.has_edge(x_prime, y_prime))
    throw std::invalid_argument("cross_edges: {y,z} or {x',y'} is not a base edge");
  const Edge e = make_edge(y, z);
  const Edge ep = make_edge(x_prime, y_prime);
  std::vector<Edge> edges;
  edges.reserve(inst.base.edge_count());
  for (const Edge& f : inst.base.edges())
    if (f != e && f != ep) edges.push_back(f);
  edges.push_back(make_edge(y, y_prime));
  edges.push_back(make_edge(x_prime, z));
  LowerBoundInstance out = inst;
  out.crossing = Crossing{y, z, x_prime};
  out.crossed = Graph::from_edges(inst.base.vertex_count(), std::move(edges));
  return out;
}

std::vector<Crossing> enumerate_family(std::size_t t) {
  LowerBoundInstance shape;
  shape.t = t;
  std::vector<Crossing> out;
  out.reserve(t * t * t);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b)
      for (std::size_t c = 0; c < t; ++c)
        out.push_back({shape.y(a), shape.z(b), shape.prime(shape.x(c))});
  return out;
}

CrossingPair make_crossing_pair(std::size_t t, const Crossing& crossing, std::uint64_t phi_seed) {
  CrossingPair pair;
  pair.base = build_base_graph(t);
  pair.phi = assign_phi(pair.base, phi_seed);
  pair.phi_prime = assign_phi_prime(pair.base, pair.phi, pair.base.unprime(crossing.x_prime),
                                    crossing.y, crossing.z);
  pair.base.psi = combine_psi(pair.base, pair.phi, pair.phi_prime);
  pair.crossed = cross_edges(pair.base, crossing.y, crossing.z, crossing.x_prime);
  return pair;
}

}  // namespace ktsim
