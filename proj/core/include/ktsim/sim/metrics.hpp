#pragma once

#include <cstdint>
#include <vector>

#include "ktsim/graph/graph.hpp"

namespace ktsim {

struct RunMetrics {
  std::uint64_t messages = 0;   // ceil(bits / word_bits) summed over envelopes
  std::uint64_t envelopes = 0;
  std::uint64_t rounds = 0;
  std::vector<Edge> utilized_edges;  // sorted, unique
  std::uint64_t charged_messages = 0;
  std::uint64_t charged_rounds = 0;

  /// Sequential composition: counts add, utilized sets unite.
  void absorb(const RunMetrics& later);
};

}  // namespace ktsim
