#include "ktsim/coloring/partition.hpp"

#include <algorithm>
#include <cmath>

namespace ktsim {

namespace {

HashFamilyParams vertex_params(IdValue id_space, std::size_t n_global) {
  return HashFamilyParams::make(std::max<IdValue>(id_space, 1), kPartitionHashRange,
                                default_independence(n_global));
}

HashFamilyParams color_params(Color max_color, std::size_t n_global) {
  return HashFamilyParams::make(std::uint64_t{max_color} + 1, kPartitionHashRange,
                                default_independence(n_global));
}

}  // namespace

PartitionHashes PartitionHashes::sample(IdValue id_space, Color max_color, std::size_t n_global,
                                        const BitString& bits, std::size_t& offset) {
  const auto vp = vertex_params(id_space, n_global);
  const auto cp = color_params(max_color, n_global);
  PartitionHashes h;
  h.h_leftover = PolynomialHash::sample(vp, bits, offset);
  offset += bits_required(vp);
  h.h_vertex = PolynomialHash::sample(vp, bits, offset);
  offset += bits_required(vp);
  h.h_color = PolynomialHash::sample(cp, bits, offset);
  offset += bits_required(cp);
  return h;
}

std::uint64_t PartitionHashes::bits_needed(IdValue id_space, Color max_color, std::size_t n_global) {
  return 2 * bits_required(vertex_params(id_space, n_global)) +
         bits_required(color_params(max_color, n_global));
}

double leftover_probability(std::size_t n_global, std::size_t max_degree) {
  if (max_degree == 0) return 0.0;
  const double logn = std::log2(static_cast<double>(std::max<std::size_t>(n_global, 2)));
  return std::min(0.7, 1.25 * std::sqrt(logn) / std::pow(static_cast<double>(max_degree), 0.25));
}

std::size_t part_count(std::size_t max_degree) {
  auto k = static_cast<std::size_t>(std::sqrt(static_cast<double>(max_degree)));
  while (k * k > max_degree) --k;
  while ((k + 1) * (k + 1) <= max_degree) ++k;
  return std::max<std::size_t>(k, 1);
}

PartitionResult partition_vertices_and_palette(const Graph& g, const IdAssignment& ids,
                                               const PartitionHashes& hashes, std::size_t n_global,
                                               std::optional<double> q_override) {
  PartitionResult r;
  r.max_degree = g.max_degree();
  r.k = part_count(r.max_degree);
  r.q = q_override ? *q_override : leftover_probability(n_global, r.max_degree);
  r.h_color = hashes.h_color;
  const auto window = static_cast<std::uint64_t>(r.q * static_cast<double>(kPartitionHashRange));
  r.vertex_part.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (hashes.h_leftover(ids[v]) < window)
      r.vertex_part[v] = PartitionResult::kLeftover;
    else
      r.vertex_part[v] = static_cast<std::uint32_t>(hashes.h_vertex(ids[v]) % r.k) + 1;
  }
  return r;
}

PartitionReport check_partition_properties(const Graph& g, const Palette& palette,
                                           const PartitionResult& part) {
  PartitionReport rep;
  const std::size_t n = g.vertex_count();
  rep.n = n;
  rep.k = part.k;
  rep.q = part.q;
  rep.max_degree = g.max_degree();

  std::vector<std::size_t> same(n, 0);  // deg_{B_i}(v) or deg_L(v)
  std::vector<std::size_t> part_edges(part.k + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (part.vertex_part[u] == part.vertex_part[v]) {
        ++same[v];
        if (v < u) ++part_edges[part.vertex_part[v]];
      }
  std::vector<std::size_t> delta_part(part.k + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    delta_part[part.vertex_part[v]] = std::max(delta_part[part.vertex_part[v]], same[v]);
    if (part.in_leftover(v)) ++rep.leftover_size;
  }
  for (std::size_t i = 1; i <= part.k; ++i) {
    rep.max_part_edges = std::max(rep.max_part_edges, part_edges[i]);
    rep.max_delta_i = std::max(rep.max_delta_i, delta_part[i]);
  }
  rep.delta_l = delta_part[PartitionResult::kLeftover];

  const double logn = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  const double sqrt_delta = std::sqrt(static_cast<double>(std::max<std::size_t>(rep.max_degree, 1)));
  const double dl = static_cast<double>(rep.delta_l);
  std::vector<std::uint32_t> color_part(std::size_t{palette.max_color()} + 1, 0);
  for (Color c = 1; c < color_part.size(); ++c) color_part[c] = part.color_part(c);
  for (Vertex v = 0; v < n; ++v) {
    const auto deg = static_cast<double>(g.degree(v));
    if (part.in_leftover(v)) {
      const double g_l = static_cast<double>(palette[v].size()) - (deg - static_cast<double>(same[v]));
      const double need = std::max(static_cast<double>(same[v]), dl - std::pow(dl, 0.75)) + 1.0;
      const double margin = g_l - need;
      rep.available_margin_l = rep.available_margin_l ? std::min(*rep.available_margin_l, margin) : margin;
      rep.max_l_degree_ratio =
          std::max(rep.max_l_degree_ratio, static_cast<double>(same[v]) / std::max(logn, part.q * deg));
    } else {
      const std::uint32_t i = part.vertex_part[v];
      std::int64_t g_i = 0;
      for (Color c : palette[v])
        if (color_part[c] == i) ++g_i;
      const std::int64_t margin = g_i - static_cast<std::int64_t>(delta_part[i] + 1);
      rep.available_margin_b = rep.available_margin_b ? std::min(*rep.available_margin_b, margin) : margin;
      rep.max_b_degree_ratio =
          std::max(rep.max_b_degree_ratio, static_cast<double>(same[v]) / std::max(logn, deg / sqrt_delta));
    }
  }
  return rep;
}

}  // namespace ktsim
