#include "ktsim/sim/utilization.hpp"

namespace ktsim {

UtilizationTracker::UtilizationTracker(const Graph& g, const IdAssignment& ids)
    : g_(&g), ids_(&ids), used_(g.slot_count(), 0) {}

void UtilizationTracker::mark(Vertex u, Vertex v) {
  if (u == v) return;
  const Edge e = make_edge(u, v);
  auto s = g_->slot(e.first, e.second);
  if (!s || used_[*s]) return;
  used_[*s] = 1;
  ++count_;
}

void UtilizationTracker::observe(Vertex src, Vertex dst, const Message& msg) {
  mark(src, dst);
  for (IdValue id : msg.id_fields()) {
    auto w = ids_->vertex_of(id);
    if (!w) continue;
    mark(src, *w);
    mark(dst, *w);
  }
}

std::vector<Edge> UtilizationTracker::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (Vertex u = 0; u < g_->vertex_count(); ++u) {
    auto nb = g_->neighbors(u);
    const std::size_t base = g_->slot_count() == 0 ? 0 : (nb.data() - g_->neighbors(0).data());
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (u < nb[i] && used_[base + i]) out.emplace_back(u, nb[i]);
  }
  return out;
}

}  // namespace ktsim
