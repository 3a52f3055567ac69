#include "ktsim/coloring/trial_coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ktsim {

std::uint32_t color_bits(Color max_color) {
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(max_color)));
}

TrialColoring::TrialColoring(const Graph& g, std::vector<std::int32_t> group,
                             std::vector<std::vector<Color>> lists, std::vector<Color>& color, QueryFn query)
    : g_(g), group_(std::move(group)), lists_(std::move(lists)), color_(color), query_(std::move(query)) {
  const std::size_t n = g.vertex_count();
  Color max_color = 1;
  for (const auto& l : lists_)
    if (!l.empty()) max_color = std::max(max_color, l.back());
  color_bits_ = color_bits(max_color);
  peers_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (group_[v] < 0) continue;
    for (Vertex u : g.neighbors(v))
      if (group_[u] == group_[v]) peers_[v].push_back(u);
  }
  proposal_.assign(n, 0);
  blocked_.assign(n, 0);
  fixed_phase_.assign(n, 0);
}

void TrialColoring::drop(Vertex v, Color c) {
  auto& l = lists_[v];
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it != l.end() && *it == c) l.erase(it);
}

void TrialColoring::keep(NodeContext& ctx) {
  const Vertex v = ctx.self();
  color_[v] = proposal_[v];
  fixed_phase_[v] = (ctx.round() - 1) / phase_length() + 1;
  const Message kept = Message::make(tags::kKept, color_bits_).with_word(proposal_[v]);
  for (Vertex u : peers_[v]) ctx.send(u, kept);
  ctx.set_output(color_[v]);
  ctx.halt();
}

void TrialColoring::on_round(NodeContext& ctx) {
  const Vertex v = ctx.self();
  if (group_[v] < 0) {
    // bystander or previously colored vertex: answer queries, otherwise idle
    for (const auto& e : ctx.inbox())
      if (e.msg.tag == tags::kCheck)
        ctx.send(e.src, Message::make(tags::kConflict, 1).with_word(color_[v] != 0 && color_[v] == e.msg.word()));
    ctx.sleep();
    return;
  }

  const std::uint32_t len = phase_length();
  const std::uint32_t sub = (ctx.round() - 1) % len;
  if (sub == 0) {
    for (const auto& e : ctx.inbox()) {
      if (e.msg.tag == tags::kKept) {
        drop(v, static_cast<Color>(e.msg.word()));
        std::erase(peers_[v], e.src);
      } else if (e.msg.tag == tags::kYield) {
        std::erase(peers_[v], e.src);
      }
    }
    if (lists_[v].empty()) {
      if (watch_.empty()) {
        if (!underflow_) underflow_ = v;
      } else {
        const Message yield = Message::make(tags::kYield, 1);
        for (Vertex u : g_.neighbors(v))
          if (watch_[u] || std::find(peers_[v].begin(), peers_[v].end(), u) != peers_[v].end()) ctx.send(u, yield);
        yielded_.push_back(v);
      }
      ctx.halt();
      return;
    }
    const Color c = lists_[v][uniform_below(ctx.rng(), lists_[v].size())];
    proposal_[v] = c;
    blocked_[v] = 0;
    scratch_.clear();
    if (query_) query_(v, c, scratch_);
    if (peers_[v].empty() && scratch_.empty()) {
      keep(ctx);
      return;
    }
    const Message propose = Message::make(tags::kPropose, color_bits_).with_word(c);
    for (Vertex u : peers_[v]) ctx.send(u, propose);
    const Message check = Message::make(tags::kCheck, color_bits_).with_word(c);
    for (Vertex w : scratch_) ctx.send(w, check);
    return;
  }

  for (const auto& e : ctx.inbox()) {
    if (e.msg.tag == tags::kPropose && e.msg.word() == proposal_[v]) blocked_[v] = 1;
    if (e.msg.tag == tags::kConflict && e.msg.word() != 0) {
      blocked_[v] = 1;
      drop(v, proposal_[v]);
    }
  }
  if (sub + 1 < len) return;
  if (!blocked_[v]) keep(ctx);
}

ListColoringResult list_color_subroutine(const Graph& g, const Palette& palette, std::uint64_t seed,
                                         std::uint64_t round_limit) {
  const std::string problem = check_list_coloring_input(g, palette);
  if (!problem.empty()) throw std::invalid_argument("list_color_subroutine: " + problem);
  ListColoringResult r;
  r.output.color.assign(g.vertex_count(), 0);
  TrialColoring prog(g, std::vector<std::int32_t>(g.vertex_count(), 0), palette.lists, r.output.color);
  RunOptions opt;
  opt.seed = seed;
  opt.round_limit = round_limit;
  const IdAssignment ids = IdAssignment::identity(g.vertex_count());
  RunResult run = run_synchronous(g, ids, prog, opt);
  r.metrics = std::move(run.metrics);
  r.termination = run.termination;
  r.underflow = prog.underflow();
  r.output.fixed_at = prog.fixed_phase();
  return r;
}

}  // namespace ktsim
