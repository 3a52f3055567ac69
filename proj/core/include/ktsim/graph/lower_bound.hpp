#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"

namespace ktsim {

enum class Part : std::uint8_t { X, Y, Z, Xp, Yp, Zp };

std::string_view part_name(Part p);

/// e = {y, z} in G and e' = {x', y'} in G', where y' is the copy of y.
struct Crossing {
  Vertex y = 0;
  Vertex z = 0;
  Vertex x_prime = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Two copies G, G' of the three-layer graph X - Y - Z (each layer pair a
/// complete bipartite K_{t,t}). Vertex numbering: X = [0, t), Y = [t, 2t),
/// Z = [2t, 3t), and the primed copy of v is v + 3t.
struct LowerBoundInstance {
  std::size_t t = 0;
  Graph base;
  std::optional<Crossing> crossing;
  Graph crossed;  // empty unless crossing is set
  IdAssignment psi;
  std::vector<Part> part_labels;

  Vertex x(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex y(std::size_t i) const { return static_cast<Vertex>(t + i); }
  Vertex z(std::size_t i) const { return static_cast<Vertex>(2 * t + i); }
  Vertex prime(Vertex v) const { return static_cast<Vertex>(v + 3 * t); }
  Vertex unprime(Vertex v) const { return static_cast<Vertex>(v - 3 * t); }
  Part part(Vertex v) const { return part_labels[v]; }

  /// The graph an execution on this instance runs on.
  const Graph& graph() const { return crossing ? crossed : base; }
};

/// Throws std::invalid_argument for t = 0.
LowerBoundInstance build_base_graph(std::size_t t);

/// Even IDs: X in [0, 2t), Y in [10t, 12t), Z in [20t, 22t). seed = 0 keeps
/// the even slots of each window in vertex order; any other seed permutes
/// them. The returned assignment covers V only (3t vertices).
IdAssignment assign_phi(const LowerBoundInstance& inst, std::uint64_t seed);

/// IDs for V' (indexed by the unprimed vertex, 3t entries), shifting each
/// primed layer so that phi'(x') = phi(y) + 1 and phi'(y') = phi(z) + 1.
IdAssignment assign_phi_prime(const LowerBoundInstance& inst, const IdAssignment& phi, Vertex x,
                              Vertex y, Vertex z);

/// psi = phi on V, phi' on V' (6t entries, ID space [0, 40t)).
IdAssignment combine_psi(const LowerBoundInstance& inst, const IdAssignment& phi,
                         const IdAssignment& phi_prime);

enum class SwapVariant { X, Z };

/// X: exchange the IDs of x' and y. Z: exchange the IDs of y' and z.
IdAssignment make_swapped_assignment(const LowerBoundInstance& inst, const IdAssignment& psi,
                                     SwapVariant variant, const Crossing& crossing);

/// Replaces {y, z}, {x', y'} by {y, y'}, {x', z}. Throws std::invalid_argument
/// if either removed edge is missing from the base graph.
LowerBoundInstance cross_edges(const LowerBoundInstance& inst, Vertex y, Vertex z, Vertex x_prime);

/// All t^3 crossings, ordered by (y, z, x').
std::vector<Crossing> enumerate_family(std::size_t t);

/// Base and crossed instances for one crossing with psi installed on both.
struct CrossingPair {
  LowerBoundInstance base;
  LowerBoundInstance crossed;
  IdAssignment phi;
  IdAssignment phi_prime;
};

CrossingPair make_crossing_pair(std::size_t t, const Crossing& crossing, std::uint64_t phi_seed = 0);

}  // namespace ktsim
