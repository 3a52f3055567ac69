#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ktsim/graph/graph.hpp"
#include "ktsim/sim/engine.hpp"

namespace ktsim::lb {

/// Reference node programs for crossing experiments. All of them only
/// compare, store and forward IDs (except `fabricating`, which exists to be
/// caught by the audit). Each registers an ordinal summary of its view as
/// state every round.
enum class Fixture {
  silent,              // sends nothing, outputs 0
  order_coloring,      // 1 if all neighbor IDs larger, 3 if all smaller, else 2
  mis_middle,          // in iff it has both smaller and larger neighbors
  mis_extremes,        // in iff all neighbors larger or all smaller
  flooding,            // sends own ID, then forwards every ID received
  min_neighbor_ping,   // local minima send one bit to their smallest neighbor
  fabricating,         // sends its own ID plus one
};

enum class OutputKind { none, coloring, mis };

OutputKind output_kind(Fixture f);
std::string_view fixture_name(Fixture f);
/// Throws std::invalid_argument for unknown names.
Fixture fixture_from_name(std::string_view name);

std::unique_ptr<Protocol> make_fixture(Fixture f, std::size_t n);

}  // namespace ktsim::lb
