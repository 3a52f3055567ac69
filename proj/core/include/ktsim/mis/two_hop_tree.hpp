#pragma once

#include <map>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/graph/kt_view.hpp"

namespace ktsim {

/// Depth-2 BFS tree of a root: every vertex exactly two hops away hangs
/// under its lowest-ID common neighbor with the root.
struct TwoHopTree {
  Vertex root = 0;
  std::vector<Vertex> depth1;          // sorted
  std::map<Vertex, Vertex> parent;     // depth-2 vertex -> depth-1 parent

  std::vector<Vertex> children(Vertex w) const;
  friend bool operator==(const TwoHopTree&, const TwoHopTree&) = default;
};

/// From the root's KT-2 view alone. Throws std::invalid_argument if the view
/// has rho < 2.
TwoHopTree build_two_hop_tree(const KTView& view);

/// Children of `w` in the tree of `root`, computed from w's KT-2 view alone.
std::vector<Vertex> two_hop_children(const KTView& view_of_w, Vertex root);

/// Same tree straight from the graph (what every node computes, without
/// materializing views).
TwoHopTree build_two_hop_tree(const Graph& g, const IdAssignment& ids, Vertex root);

}  // namespace ktsim
