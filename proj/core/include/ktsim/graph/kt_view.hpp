#pragma once

#include <map>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"

namespace ktsim {

/// Initial knowledge of one node under KT-rho: the IDs of every vertex within
/// distance rho, and the full neighbor-ID list of every vertex within
/// distance rho - 1.
struct KTView {
  Vertex center = 0;
  unsigned rho = 0;
  std::map<Vertex, IdValue> known_ids;
  std::map<Vertex, std::vector<IdValue>> known_adjacency;

  bool knows_id(Vertex v) const { return known_ids.contains(v); }
  bool knows_adjacency(Vertex v) const { return known_adjacency.contains(v); }

  /// True if everything this view knows is also known by `other`.
  bool subset_of(const KTView& other) const;
};

KTView kt_view(const Graph& g, const IdAssignment& ids, Vertex v, unsigned rho);

}  // namespace ktsim
