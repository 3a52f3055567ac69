#include "ktsim/graph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace ktsim {

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    if (e.first >= n || e.second >= n)
      throw std::invalid_argument("edge endpoint out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
  return from_sorted_unique(n, edges);
}

Graph Graph::from_sorted_unique(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    g.max_degree_ = std::max(g.max_degree_, deg[v]);
  }
  return g;
}

std::optional<std::size_t> Graph::slot(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  auto first = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
  auto last = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
  auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - adj_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> local(n_, kUnreached);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (local[keep[i]] != kUnreached) throw std::invalid_argument("induced: duplicate vertex");
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex v : neighbors(u))
      if (local[v] != kUnreached && local[u] < local[v]) edges.emplace_back(local[u], local[v]);
  std::sort(edges.begin(), edges.end());
  return from_sorted_unique(keep.size(), edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> label(n, kUnreached);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnreached) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (label[v] == kUnreached) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

namespace {

// All-sources BFS on adjacency bitsets: n^3/64 word operations, which beats
// n separate list BFS runs on the dense graphs used in experiments.
std::size_t diameter_bitset(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);

  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / 64] = frontier[s / 64] = std::uint64_t{1} << (s % 64);
    std::size_t ecc = 0;
    for (;;) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          const std::uint64_t* row = &rows[u * words];
          for (std::size_t k = 0; k < words; ++k) next[k] |= row[k];
        }
      }
      bool any = false;
      for (std::size_t k = 0; k < words; ++k) {
        next[k] &= ~visited[k];
        visited[k] |= next[k];
        any = any || next[k] != 0;
      }
      if (!any) break;
      frontier.swap(next);
      ++ecc;
    }
    best = std::max(best, ecc);
  }
  return best;
}

std::size_t diameter_bfs(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s))
      if (d != kUnreached) best = std::max<std::size_t>(best, d);
  }
  return best;
}

}  // namespace

std::size_t diameter(const Graph& g) {
  if (g.vertex_count() <= 1) return 0;
  if (g.vertex_count() <= 16384) return diameter_bitset(g);
  return diameter_bfs(g);
}

}  // namespace ktsim
