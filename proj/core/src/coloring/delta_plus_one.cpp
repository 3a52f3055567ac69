#include "ktsim/coloring/delta_plus_one.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ktsim/coloring/trial_coloring.hpp"
#include "ktsim/random.hpp"

namespace ktsim {

std::uint64_t leftover_edge_threshold(std::size_t n) {
  const auto logn = n <= 1 ? 1 : static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n)) - 1e-9));
  return 8 * static_cast<std::uint64_t>(n) * logn;
}

namespace {

struct LevelInfo {
  PartitionResult part;
  std::vector<std::uint32_t> color_part;  // by color
};

class Attempt {
 public:
  Attempt(const Graph& g, const IdAssignment& ids, const Palette& palette, const Alg1Config& cfg,
          const BroadcastService& svc, std::uint64_t seed, Alg1Result& out)
      : g_(g), ids_(ids), palette_(palette), cfg_(cfg), svc_(svc), seed_(seed), out_(out) {}

  // Returns an empty string on success, otherwise why the attempt failed.
  std::string run() {
    const std::size_t n = g_.vertex_count();
    const Color max_color = palette_.max_color();
    const std::uint64_t per_level = PartitionHashes::bits_needed(ids_.space(), max_color, n);
    const BroadcastResult r = svc_.broadcast(per_level * (cfg_.recursion_cap + 1), seed_);
    out_.metrics.absorb(r.metrics);
    if (!std::all_of(r.reached.begin(), r.reached.end(), [](bool b) { return b; }))
      return "shared bits did not reach every vertex";

    color_.assign(n, 0);
    level_of_.assign(n, 0);
    part_of_.assign(n, 0);
    out_.output.fixed_at.assign(n, 0);
    out_.levels.clear();
    levels_.clear();

    std::vector<Vertex> current(n);
    for (Vertex v = 0; v < n; ++v) current[v] = v;
    std::size_t offset = 0;
    unsigned depth = 0;
    const std::uint64_t threshold = leftover_edge_threshold(n);

    for (std::uint32_t level = 1;; ++level) {
      const Graph sub = g_.induced(current);
      std::vector<IdValue> sub_id_values(current.size());
      for (std::size_t i = 0; i < current.size(); ++i) sub_id_values[i] = ids_[current[i]];
      const IdAssignment sub_ids(std::move(sub_id_values), ids_.space());
      out_.metrics.absorb(svc_.aggregate());  // max degree of the current graph

      Alg1Level info;
      info.vertices = current.size();
      info.max_degree = sub.max_degree();
      if (sub.max_degree() == 0) {
        out_.levels.push_back(info);
        if (level == 1) {
          // no edges at all: nothing to coordinate
          for (Vertex v : current) {
            color_[v] = palette_[v].front();
            out_.output.fixed_at[v] = 1;
          }
          return {};
        }
        return color_directly(current, level);
      }

      const PartitionHashes hashes = PartitionHashes::sample(ids_.space(), max_color, n, r.bits, offset);
      LevelInfo li{partition_vertices_and_palette(sub, sub_ids, hashes, n), {}};
      li.color_part.assign(std::size_t{max_color} + 1, 0);
      for (Color c = 1; c <= max_color; ++c) li.color_part[c] = li.part.color_part(c);
      levels_.push_back(std::move(li));
      const LevelInfo& L = levels_.back();
      info.k = L.part.k;
      info.q = L.part.q;

      std::vector<std::uint32_t> part_now(n, PartitionResult::kLeftover);
      for (std::size_t i = 0; i < current.size(); ++i) part_now[current[i]] = L.part.vertex_part[i];

      std::vector<std::int32_t> group(n, -1);
      std::vector<std::vector<Color>> lists(n);
      std::vector<Vertex> leftover;
      for (Vertex v : current) {
        const std::uint32_t p = part_now[v];
        if (p == PartitionResult::kLeftover) {
          leftover.push_back(v);
          continue;
        }
        for (Color c : palette_[v])
          if (L.color_part[c] == p) lists[v].push_back(c);
        // Short shares (possible with deg+1 palettes) defer v to L. Parts are
        // locally computable, so neighbors learn this without a message.
        if (lists[v].size() < same_part_degree(v, p, part_now) + 1) {
          lists[v].clear();
          leftover.push_back(v);
          part_now[v] = PartitionResult::kLeftover;
          ++info.deferred;
          continue;
        }
        group[v] = static_cast<std::int32_t>(p);
        part_of_[v] = p;
      }
      std::vector<std::uint8_t> watch(n, 0);
      for (Vertex v : leftover) watch[v] = 1;
      std::vector<Vertex> yielded;
      if (auto why = color_groups(std::move(group), std::move(lists), level, &watch, &yielded); !why.empty())
        return why;
      // a yielded vertex told its peers and L-neighbors; it recurses with L
      for (Vertex v : yielded) {
        part_now[v] = PartitionResult::kLeftover;
        part_of_[v] = 0;
        leftover.push_back(v);
      }
      info.deferred += yielded.size();
      std::sort(leftover.begin(), leftover.end());
      for (Vertex v : current)
        if (part_now[v] != PartitionResult::kLeftover) level_of_[v] = level;

      // |E(G[L])| via convergecast
      out_.metrics.absorb(svc_.aggregate());
      std::vector<std::uint8_t> in_left(n, 0);
      for (Vertex v : leftover) in_left[v] = 1;
      std::uint64_t left_edges = 0;
      for (Vertex v : leftover)
        for (Vertex u : g_.neighbors(v)) left_edges += (in_left[u] && v < u);
      info.leftover = leftover.size();
      info.leftover_edges = left_edges;
      out_.levels.push_back(info);

      if (leftover.empty()) break;
      if (left_edges <= threshold) return color_directly(leftover, level + 1);
      if (++depth > cfg_.recursion_cap) return fmt::format("recursion cap {} exceeded", cfg_.recursion_cap);
      out_.recursion_depth = depth;
      current = std::move(leftover);
    }
    return {};
  }

  void finish() {
    out_.output.color = color_;
  }

 private:
  std::string color_directly(const std::vector<Vertex>& vs, std::uint32_t level) {
    std::vector<std::int32_t> group(g_.vertex_count(), -1);
    std::vector<std::vector<Color>> lists(g_.vertex_count());
    for (Vertex v : vs) {
      group[v] = 0;
      lists[v] = palette_[v];
    }
    auto why = color_groups(std::move(group), std::move(lists), level);
    for (Vertex v : vs) level_of_[v] = level;
    return why;
  }

  // Same-part neighbors each take at most one color of v's share.
  std::size_t same_part_degree(Vertex v, std::uint32_t p, const std::vector<std::uint32_t>& part_now) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += part_now[w] == p;
    return d;
  }

  std::string color_groups(std::vector<std::int32_t> group, std::vector<std::vector<Color>> lists,
                           std::uint32_t level, const std::vector<std::uint8_t>* watch = nullptr,
                           std::vector<Vertex>* yielded = nullptr) {
    std::vector<std::uint32_t> cp(levels_.size() + 1, 0);
    auto query = [&](Vertex v, Color c, std::vector<Vertex>& targets) {
      // an earlier-level neighbor can hold c only if c lies in its color part
      for (std::size_t l = 0; l < levels_.size(); ++l)
        cp[l + 1] = c < levels_[l].color_part.size() ? levels_[l].color_part[c] : levels_[l].part.color_part(c);
      for (Vertex w : g_.neighbors(v)) {
        const std::uint32_t lw = level_of_[w];
        if (lw != 0 && lw < level && part_of_[w] == cp[lw]) targets.push_back(w);
      }
    };
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (group[v] >= 0) members.push_back(v);
    TrialColoring prog(g_, std::move(group), std::move(lists), color_,
                       level > 1 ? TrialColoring::QueryFn(query) : TrialColoring::QueryFn{});
    if (watch) prog.enable_yield(*watch);
    RunOptions opt;
    opt.seed = mix_seed(seed_, 0xa1 + level);
    opt.round_limit = cfg_.level_round_limit;
    opt.word_bits = cfg_.word_bits;
    RunResult run = run_synchronous(g_, ids_, prog, opt);
    out_.metrics.absorb(run.metrics);
    for (Vertex v : members) out_.output.fixed_at[v] = level;
    if (auto u = prog.underflow()) return fmt::format("level {}: color list of vertex {} ran dry", level, *u);
    if (run.termination == Termination::round_limit) return fmt::format("level {}: round limit reached", level);
    if (yielded) {
      *yielded = prog.yielded();
      std::sort(yielded->begin(), yielded->end());
    }
    for (Vertex v : members)
      if (color_[v] == 0 && !(yielded && std::binary_search(yielded->begin(), yielded->end(), v)))
        return fmt::format("level {}: vertex {} left uncolored", level, v);
    return {};
  }

  const Graph& g_;
  const IdAssignment& ids_;
  const Palette& palette_;
  const Alg1Config& cfg_;
  const BroadcastService& svc_;
  std::uint64_t seed_;
  Alg1Result& out_;

  std::vector<Color> color_;
  std::vector<std::uint32_t> level_of_;  // level whose B-parts colored the vertex
  std::vector<std::uint32_t> part_of_;
  std::vector<LevelInfo> levels_;
};

}  // namespace

Alg1Result alg1_delta_plus_one(const Graph& g, const IdAssignment& ids, const Palette& palette,
                               const Alg1Config& config, std::uint64_t seed) {
  const std::string problem = check_list_coloring_input(g, palette);
  if (!problem.empty()) throw std::invalid_argument("alg1: " + problem);
  if (ids.size() != g.vertex_count()) throw std::invalid_argument("alg1: ID assignment size mismatch");
  const BroadcastService svc(g, ids, config.broadcast, config.word_bits);

  Alg1Result out;
  for (unsigned a = 0; a < std::max(1u, config.max_attempts); ++a) {
    out.attempts = a + 1;
    out.recursion_depth = 0;
    Attempt attempt(g, ids, palette, config, svc, mix_seed(seed, a), out);
    out.failure = attempt.run();
    attempt.finish();
    if (out.failure.empty()) return out;
  }
  out.flagged = true;
  return out;
}

}  // namespace ktsim
