#pragma once

#include "ktsim/coloring/palette.hpp"
#include "ktsim/errors.hpp"
#include "ktsim/graph/graph.hpp"

namespace ktsim {

/// Every vertex colored from its own list, no monochromatic edge.
Verdict verify_coloring(const Graph& g, const ColoringOutput& out, const Palette& palette);

/// Same with the common range [1, bound].
Verdict verify_coloring(const Graph& g, const ColoringOutput& out, Color bound);

}  // namespace ktsim
