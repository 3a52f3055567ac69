#include "ktsim/coloring/eps_delta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ktsim/coloring/trial_coloring.hpp"
#include "ktsim/hash/poly_hash.hpp"
#include "ktsim/random.hpp"
#include "ktsim/sim/engine.hpp"

namespace ktsim {

Color eps_palette_size(std::size_t max_degree, double eps) {
  const double raw = (1.0 + eps) * static_cast<double>(max_degree);
  auto c = static_cast<Color>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
  return std::max<Color>(1, c);
}

std::uint32_t eps_phase_budget(std::size_t n, double eps) {
  const double r = 8.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 2))) / eps;
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(r - 1e-9)));
}

namespace {

class EpsColoring final : public Protocol {
 public:
  EpsColoring(const Graph& g, const IdAssignment& ids, std::vector<PolynomialHash> hashes, Color palette_size)
      : g_(g), ids_(ids), hashes_(std::move(hashes)), bits_(color_bits(palette_size)) {
    const std::size_t n = g.vertex_count();
    candidate_.assign(hashes_.size() + 1, {});
    bucket_.assign(std::size_t{palette_size} + 1, {});
    color_.assign(n, 0);
    fixed_phase_.assign(n, 0);
    registered_.assign(n, {});
    checks_sent_.assign(n, 0);
  }

  void on_round(NodeContext& ctx) override {
    const Vertex v = ctx.self();
    const std::uint32_t phase = (ctx.round() + 1) / 2;
    const bool first = ctx.round() % 2 == 1;

    if (color_[v] != 0) {
      answer(ctx);
      ctx.sleep();
      return;
    }
    if (!first) {
      answer(ctx);
      return;
    }
    ensure_phase(phase);

    // decide the previous phase from its replies
    if (phase > 1 && checks_sent_[v] > 0) {
      bool conflict = false;
      for (const auto& e : ctx.inbox()) conflict |= e.msg.tag == tags::kConflict && e.msg.word() != 0;
      if (!conflict) {
        fix(ctx, phase - 1);
        return;
      }
    }
    if (phase > hashes_.size()) {
      ctx.halt();  // budget exhausted, left uncolored
      return;
    }
    ++node_phases_;
    const Color c = candidate_[phase][v];
    std::uint64_t sent = 0;
    for (Vertex u : bucket_[c])
      if (u != v && g_.has_edge(v, u)) {
        ctx.send(u, Message::make(tags::kCheck, bits_).with_word(c));
        ++sent;
      }
    checks_sent_[v] = sent;
    max_checks_ = std::max(max_checks_, sent);
    if (sent == 0) fix(ctx, phase);
  }

  const std::vector<Color>& colors() const { return color_; }
  const std::vector<std::uint32_t>& fixed_phase() const { return fixed_phase_; }
  std::uint64_t node_phases() const { return node_phases_; }
  std::uint64_t successes() const { return successes_; }
  std::uint64_t max_checks() const { return max_checks_; }
  std::uint32_t phases_used() const { return phases_used_; }

 private:
  // Candidates of phase i for every vertex, and for each color c the
  // vertices u with h_j(ID_u) + 1 = c for some j <= i. Both are local
  // knowledge for any node that knows ID_u and the shared hashes.
  void ensure_phase(std::uint32_t phase) {
    while (built_ < phase && built_ < hashes_.size()) {
      ++built_;
      auto& cand = candidate_[built_];
      cand.resize(g_.vertex_count());
      for (Vertex u = 0; u < g_.vertex_count(); ++u) {
        const Color c = static_cast<Color>(hashes_[built_ - 1](ids_[u]) + 1);
        cand[u] = c;
        auto& seen = registered_[u];
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
          seen.push_back(c);
          bucket_[c].push_back(u);
        }
      }
    }
  }

  void answer(NodeContext& ctx) {
    const Vertex v = ctx.self();
    const std::uint32_t phase = (ctx.round() + 1) / 2;
    for (const auto& e : ctx.inbox()) {
      if (e.msg.tag != tags::kCheck) continue;
      const auto c = static_cast<Color>(e.msg.word());
      const bool clash = color_[v] != 0 ? color_[v] == c : candidate_[phase][v] == c;
      ctx.send(e.src, Message::make(tags::kConflict, 1).with_word(clash));
    }
  }

  void fix(NodeContext& ctx, std::uint32_t phase) {
    const Vertex v = ctx.self();
    color_[v] = candidate_[phase][v];
    fixed_phase_[v] = phase;
    ++successes_;
    phases_used_ = std::max(phases_used_, phase);
    ctx.set_output(color_[v]);
    ctx.sleep();
  }

  const Graph& g_;
  const IdAssignment& ids_;
  std::vector<PolynomialHash> hashes_;
  std::uint32_t bits_;
  std::uint32_t built_ = 0;
  std::vector<std::vector<Color>> candidate_;  // [phase][vertex]
  std::vector<std::vector<Vertex>> bucket_;    // [color]
  std::vector<Color> color_;
  std::vector<std::uint32_t> fixed_phase_;
  std::vector<std::vector<Color>> registered_;
  std::vector<std::uint64_t> checks_sent_;
  std::uint64_t node_phases_ = 0, successes_ = 0, max_checks_ = 0;
  std::uint32_t phases_used_ = 0;
};

}  // namespace

Alg2Result alg2_eps_delta(const Graph& g, const IdAssignment& ids, const Alg2Config& config,
                          std::uint64_t seed) {
  if (!(config.eps > 0.0)) throw std::invalid_argument("alg2: eps must be > 0");
  if (ids.size() != g.vertex_count()) throw std::invalid_argument("alg2: ID assignment size mismatch");
  const std::size_t n = g.vertex_count();
  const BroadcastService svc(g, ids, config.broadcast, config.word_bits);

  Alg2Result out;
  out.palette_size = eps_palette_size(g.max_degree(), config.eps);
  out.phase_budget = eps_phase_budget(n, config.eps);
  const auto params = HashFamilyParams::make(std::max<IdValue>(ids.space(), 1), out.palette_size,
                                             default_independence(n));
  const std::uint64_t per_hash = bits_required(params);

  for (unsigned a = 0; a < std::max(1u, config.max_attempts); ++a) {
    out.attempts = a + 1;
    const BroadcastResult r = svc.broadcast(per_hash * out.phase_budget, mix_seed(seed, a));
    out.metrics.absorb(r.metrics);
    std::vector<PolynomialHash> hashes;
    for (std::uint32_t i = 0; i < out.phase_budget; ++i)
      hashes.push_back(PolynomialHash::sample(params, r.bits, i * per_hash));

    out.hashes = hashes;
    EpsColoring prog(g, ids, std::move(hashes), out.palette_size);
    RunOptions opt;
    opt.seed = mix_seed(seed, 0xe2 + a);
    opt.round_limit = 2ull * out.phase_budget + 1;
    opt.word_bits = config.word_bits;
    opt.record_trace = config.record_trace;
    RunResult run = run_synchronous(g, ids, prog, opt);
    out.trace = std::move(run.trace);
    out.metrics.absorb(run.metrics);
    out.output.color = prog.colors();
    out.output.fixed_at = prog.fixed_phase();
    out.phases_used = prog.phases_used();
    out.node_phases += prog.node_phases();
    out.node_successes += prog.successes();
    out.max_checks_per_node_phase = std::max(out.max_checks_per_node_phase, prog.max_checks());
    const auto missing = std::count(out.output.color.begin(), out.output.color.end(), Color{0});
    if (missing == 0) {
      out.failure.clear();
      return out;
    }
    out.failure = fmt::format("{} vertices uncolored after {} phases", missing, out.phase_budget);
  }
  out.flagged = true;
  return out;
}

}  // namespace ktsim
