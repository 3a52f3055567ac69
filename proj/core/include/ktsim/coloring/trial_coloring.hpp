#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ktsim/coloring/palette.hpp"
#include "ktsim/graph/graph.hpp"
#include "ktsim/graph/ids.hpp"
#include "ktsim/sim/engine.hpp"

namespace ktsim {

namespace tags {
inline constexpr std::uint16_t kPropose = 10;
inline constexpr std::uint16_t kKept = 11;
inline constexpr std::uint16_t kCheck = 12;
inline constexpr std::uint16_t kConflict = 13;
inline constexpr std::uint16_t kYield = 14;
}  // namespace tags

/// Trial-color list coloring. Vertices with group >= 0 take part; two
/// participants interact only when adjacent and in the same group. Each
/// phase a participant proposes a uniform color from its remaining list and
/// keeps it unless an active peer proposed the same color. Winners announce
/// the kept color so peers drop it.
///
/// With a query function, a proposal of c is also sent as CHECK(c) to the
/// already-colored vertices the function names; they answer with one bit
/// and a positive answer removes c for good. Phases then take 3 rounds
/// instead of 2.
class TrialColoring final : public Protocol {
 public:
  using QueryFn = std::function<void(Vertex v, Color c, std::vector<Vertex>& targets)>;

  /// `color` is shared: earlier colors answer queries, new colors land here.
  TrialColoring(const Graph& g, std::vector<std::int32_t> group, std::vector<std::vector<Color>> lists,
                std::vector<Color>& color, QueryFn query = {});

  void on_round(NodeContext& ctx) override;

  std::uint32_t phase_length() const { return query_ ? 3 : 2; }
  /// Vertex whose list ran dry, if any (only without yielding).
  std::optional<Vertex> underflow() const { return underflow_; }

  /// Lets a participant whose list runs dry give up instead of failing: it
  /// sends a 1-bit YIELD to its peers and to neighbors u with watch[u] = 1,
  /// then halts uncolored.
  void enable_yield(std::vector<std::uint8_t> watch) { watch_ = std::move(watch); }
  const std::vector<Vertex>& yielded() const { return yielded_; }
  const std::vector<std::uint32_t>& fixed_phase() const { return fixed_phase_; }

 private:
  void keep(NodeContext& ctx);
  void drop(Vertex v, Color c);

  const Graph& g_;
  std::vector<std::int32_t> group_;
  std::vector<std::vector<Color>> lists_;
  std::vector<Color>& color_;
  QueryFn query_;
  std::uint32_t color_bits_;

  std::vector<std::vector<Vertex>> peers_;  // active same-group neighbors
  std::vector<Color> proposal_;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::uint32_t> fixed_phase_;
  std::vector<Vertex> scratch_;
  std::optional<Vertex> underflow_;
  std::vector<std::uint8_t> watch_;
  std::vector<Vertex> yielded_;
};

struct ListColoringResult {
  ColoringOutput output;
  RunMetrics metrics;
  Termination termination = Termination::all_halted;
  std::optional<Vertex> underflow;
  bool ok() const { return !underflow && termination != Termination::round_limit; }
};

/// Colors `g` from `palette` with TrialColoring, identity IDs. Throws
/// std::invalid_argument if some list is shorter than deg(v) + 1.
ListColoringResult list_color_subroutine(const Graph& g, const Palette& palette, std::uint64_t seed,
                                         std::uint64_t round_limit = 4096);

/// Bits needed to name a color up to max_color.
std::uint32_t color_bits(Color max_color);

}  // namespace ktsim
