#pragma once

#include <cstdint>
#include <vector>

#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/hash/bits.hpp"
#include "ktsim/sim/metrics.hpp"

namespace ktsim {

struct BroadcastBackendConfig {
  enum class Mode { accounted_oracle, flooding };
  Mode mode = Mode::accounted_oracle;
  double delta = 0.5;
  double polylog_factor = 1.0;

  /// Throws std::invalid_argument unless delta in [0, 1] and polylog_factor >= 1.
  void validate() const;
};

/// ceil((log2 n)^2), 0 for n <= 1.
std::uint64_t log2_squared_ceil(std::size_t n);

struct BroadcastResult {
  BitString bits;
  std::vector<bool> reached;  // all true in oracle mode
  RunMetrics metrics;
};

/// Leader election plus broadcast / convergecast over the whole graph,
/// either charged by formula (oracle) or simulated by flooding from the
/// minimum-ID vertex.
class BroadcastService {
 public:
  BroadcastService(const Graph& g, const IdAssignment& ids, BroadcastBackendConfig config,
                   unsigned word_bits = 0);

  /// Every node learns the same `bit_count` bits drawn from `seed`.
  BroadcastResult broadcast(std::size_t bit_count, std::uint64_t seed) const;

  /// Cost of one convergecast of a single word to the leader followed by a
  /// broadcast of the result.
  RunMetrics aggregate() const;

  std::uint64_t diameter() const { return diameter_; }
  std::uint64_t charged_messages() const;
  std::uint64_t charged_rounds() const;
  const BroadcastBackendConfig& config() const { return config_; }

 private:
  const Graph& g_;
  IdAssignment ids_;  // copied; callers often pass temporaries
  BroadcastBackendConfig config_;
  unsigned word_bits_;
  std::uint64_t diameter_ = 0;
};

}  // namespace ktsim
