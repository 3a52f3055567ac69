#pragma once

#include <iosfwd>
#include <string>

#include "ktsim/graph/graph.hpp"

namespace ktsim {

/// Text format: a header line "n m", then m lines "u v" (0-based). Lines
/// starting with '#' and blank lines are skipped; edge order is free.
/// Throws ParseError on malformed input.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Writes the same format with edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);

}  // namespace ktsim
