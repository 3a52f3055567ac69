#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ktsim {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
/// by vertex index.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints outside [0, n).
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return adj_.size() / 2; }
  std::size_t max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const { return slot(u, v).has_value(); }

  /// Position of v inside the CSR array of u, if {u, v} is an edge.
  std::optional<std::size_t> slot(Vertex u, Vertex v) const;

  /// Size of the CSR array (2m); slots index into it.
  std::size_t slot_count() const { return adj_.size(); }

  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep` (any order, no duplicates). Vertex i of the
  /// result corresponds to keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  /// Same vertex set, only the edges for which `keep_edge(u, v)` holds.
  template <typename Pred>
  Graph filter_edges(Pred keep_edge) const {
    std::vector<Edge> kept;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v && keep_edge(u, v)) kept.emplace_back(u, v);
    return from_sorted_unique(n_, kept);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  static Graph from_sorted_unique(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::size_t max_degree_ = 0;
};

/// Hop distances from `source`; kUnreached for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Component label per vertex, labels dense from 0.
std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count = nullptr);

/// Largest eccentricity within any connected component (exact). 0 for the
/// empty and single-vertex graphs.
std::size_t diameter(const Graph& g);

}  // namespace ktsim
