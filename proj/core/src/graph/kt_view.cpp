#include "ktsim/graph/kt_view.hpp"

#include <deque>

namespace ktsim {

bool KTView::subset_of(const KTView& other) const {
  for (const auto& [v, id] : known_ids) {
    auto it = other.known_ids.find(v);
    if (it == other.known_ids.end() || it->second != id) return false;
  }
  for (const auto& [v, adj] : known_adjacency) {
    auto it = other.known_adjacency.find(v);
    if (it == other.known_adjacency.end() || it->second != adj) return false;
  }
  return true;
}

KTView kt_view(const Graph& g, const IdAssignment& ids, Vertex v, unsigned rho) {
  KTView view;
  view.center = v;
  view.rho = rho;

  std::map<Vertex, unsigned> dist{{v, 0}};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const unsigned du = dist[u];
    if (du == rho) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist.emplace(w, du + 1).second) queue.push_back(w);
    }
  }

  for (const auto& [u, d] : dist) {
    view.known_ids.emplace(u, ids[u]);
    if (rho > 0 && d + 1 <= rho) {
      std::vector<IdValue> adj;
      adj.reserve(g.degree(u));
      for (Vertex w : g.neighbors(u)) adj.push_back(ids[w]);
      view.known_adjacency.emplace(u, std::move(adj));
    }
  }
  return view;
}

}  // namespace ktsim
