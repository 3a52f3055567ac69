#include "ktsim/mis/two_hop_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ktsim {

std::vector<Vertex> TwoHopTree::children(Vertex w) const {
  std::vector<Vertex> out;
  for (const auto& [x, p] : parent)
    if (p == w) out.push_back(x);
  return out;
}

namespace {

std::map<IdValue, Vertex> invert(const KTView& view) {
  std::map<IdValue, Vertex> by_id;
  for (const auto& [v, id] : view.known_ids) by_id.emplace(id, v);
  return by_id;
}

std::vector<Vertex> to_vertices(const std::map<IdValue, Vertex>& by_id, const std::vector<IdValue>& id_list) {
  std::vector<Vertex> out;
  out.reserve(id_list.size());
  for (IdValue id : id_list) out.push_back(by_id.at(id));
  return out;
}

}  // namespace

TwoHopTree build_two_hop_tree(const KTView& view) {
  if (view.rho < 2) throw std::invalid_argument("build_two_hop_tree: needs a KT-2 view");
  const auto by_id = invert(view);
  TwoHopTree t;
  t.root = view.center;
  t.depth1 = to_vertices(by_id, view.known_adjacency.at(view.center));
  std::sort(t.depth1.begin(), t.depth1.end());
  std::vector<Vertex> by_rank = t.depth1;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](Vertex a, Vertex b) { return view.known_ids.at(a) < view.known_ids.at(b); });
  for (Vertex w : by_rank)
    for (Vertex x : to_vertices(by_id, view.known_adjacency.at(w))) {
      if (x == t.root || std::binary_search(t.depth1.begin(), t.depth1.end(), x)) continue;
      t.parent.emplace(x, w);  // first (lowest-ID) parent wins
    }
  return t;
}

std::vector<Vertex> two_hop_children(const KTView& view_of_w, Vertex root) {
  if (view_of_w.rho < 2) throw std::invalid_argument("two_hop_children: needs a KT-2 view");
  const Vertex w = view_of_w.center;
  const auto by_id = invert(view_of_w);
  const auto& root_adj = view_of_w.known_adjacency.at(root);
  const std::set<IdValue> root_nb(root_adj.begin(), root_adj.end());
  const IdValue root_id = view_of_w.known_ids.at(root);
  const IdValue w_id = view_of_w.known_ids.at(w);
  if (!root_nb.contains(w_id)) return {};
  std::vector<Vertex> out;
  for (IdValue x_id : view_of_w.known_adjacency.at(w)) {
    if (x_id == root_id || root_nb.contains(x_id)) continue;
    const Vertex x = by_id.at(x_id);
    // lowest-ID common neighbor of root and x
    IdValue best = w_id;
    for (IdValue c : view_of_w.known_adjacency.at(x))
      if (root_nb.contains(c)) best = std::min(best, c);
    if (best == w_id) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoHopTree build_two_hop_tree(const Graph& g, const IdAssignment& ids, Vertex root) {
  TwoHopTree t;
  t.root = root;
  auto nb = g.neighbors(root);
  t.depth1.assign(nb.begin(), nb.end());
  std::vector<Vertex> by_rank = t.depth1;
  std::sort(by_rank.begin(), by_rank.end(), [&](Vertex a, Vertex b) { return ids[a] < ids[b]; });
  std::vector<std::uint8_t> near(g.vertex_count(), 0);
  near[root] = 1;
  for (Vertex w : nb) near[w] = 1;
  for (Vertex w : by_rank)
    for (Vertex x : g.neighbors(w))
      if (!near[x]) {
        near[x] = 1;
        t.parent.emplace(x, w);
      }
  return t;
}

}  // namespace ktsim
