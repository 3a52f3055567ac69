#include "ktsim/graph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ktsim/random.hpp"

namespace ktsim {

Graph generate_random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_random_graph: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_random_graph: p outside [0,1]");
  if (p == 0.0) return Graph(n);
  if (p == 1.0) return complete_graph(n);

  Rng rng(mix_seed(seed, 0x6e70));
  const double log_q = std::log1p(-p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.05) + 16);
  // Batagelj–Brandes: walk the lower triangle (v, w), w < v, in row order,
  // jumping geometric gaps between successive edges.
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = uniform_unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) return path_graph(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace ktsim
