#pragma once

#include <cstdint>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/sim/message.hpp"

namespace ktsim {

/// Online utilized-edge bookkeeping over the CSR slots of a graph.
class UtilizationTracker {
 public:
  UtilizationTracker(const Graph& g, const IdAssignment& ids);

  void observe(Vertex src, Vertex dst, const Message& msg);

  std::vector<Edge> edges() const;
  std::size_t count() const { return count_; }

 private:
  void mark(Vertex u, Vertex v);

  const Graph* g_;
  const IdAssignment* ids_;
  std::vector<std::uint8_t> used_;  // indexed by slot(min, max)
  std::size_t count_ = 0;
};

}  // namespace ktsim
