#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ktsim/coloring/palette.hpp"
#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/hash/bits.hpp"
#include "ktsim/hash/poly_hash.hpp"

namespace ktsim {

/// Range of the vertex-side hashes; L-membership is h_L(ID) < q * range.
inline constexpr std::uint64_t kPartitionHashRange = std::uint64_t{1} << 20;

struct PartitionHashes {
  PolynomialHash h_leftover;  // ID -> [range], decides L
  PolynomialHash h_vertex;    // ID -> [range], picks B_i
  PolynomialHash h_color;     // color -> [range], picks C_i

  /// Samples the three functions from `bits` at `offset` and advances it.
  static PartitionHashes sample(IdValue id_space, Color max_color, std::size_t n_global,
                                const BitString& bits, std::size_t& offset);
  static std::uint64_t bits_needed(IdValue id_space, Color max_color, std::size_t n_global);
};

/// min(0.7, 1.25 sqrt(log2 n) / Delta^(1/4)); 0 when Delta = 0.
double leftover_probability(std::size_t n_global, std::size_t max_degree);

/// floor(sqrt(Delta)), at least 1.
std::size_t part_count(std::size_t max_degree);

struct PartitionResult {
  static constexpr std::uint32_t kLeftover = 0;

  std::vector<std::uint32_t> vertex_part;  // kLeftover or 1..k
  std::size_t k = 1;
  double q = 0.0;
  std::size_t max_degree = 0;
  PolynomialHash h_color;

  bool in_leftover(Vertex v) const { return vertex_part[v] == kLeftover; }
  std::uint32_t color_part(Color c) const {
    return static_cast<std::uint32_t>(h_color(c) % k) + 1;
  }
};

/// Pure function of (IDs, hashes, Delta, n_global): any node can compute the
/// part of any vertex whose ID it knows. `q_override` replaces the default q.
PartitionResult partition_vertices_and_palette(const Graph& g, const IdAssignment& ids,
                                               const PartitionHashes& hashes, std::size_t n_global,
                                               std::optional<double> q_override = std::nullopt);

struct PartitionReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double q = 0.0;
  std::size_t max_degree = 0;
  // (i)
  std::size_t max_part_edges = 0;
  std::size_t leftover_size = 0;
  // (ii) min over i, v in B_i of g_i(v) - (Delta_i + 1); nullopt with no B vertex
  std::optional<std::int64_t> available_margin_b;
  // (iii) min over v in L of g_L(v) - max(deg_L(v), Delta_L - Delta_L^(3/4)) - 1
  std::optional<double> available_margin_l;
  // (iv)
  std::size_t max_delta_i = 0;
  std::size_t delta_l = 0;
  double max_b_degree_ratio = 0.0;  // deg_{B_i}(v) / max(log2 n, deg(v) / sqrt(Delta))
  double max_l_degree_ratio = 0.0;  // deg_L(v) / max(log2 n, q deg(v))
};

PartitionReport check_partition_properties(const Graph& g, const Palette& palette,
                                           const PartitionResult& part);

}  // namespace ktsim
