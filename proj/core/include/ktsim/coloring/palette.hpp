#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ktsim/graph/graph.hpp"

namespace ktsim {

using Color = std::uint32_t;  // colors are >= 1; 0 means uncolored

/// Per-vertex sorted color lists.
struct Palette {
  std::vector<std::vector<Color>> lists;

  std::size_t size() const { return lists.size(); }
  const std::vector<Color>& operator[](Vertex v) const { return lists[v]; }
  bool contains(Vertex v, Color c) const;
  Color max_color() const;

  /// [deg(v) + 1] for every v.
  static Palette degree_plus_one(const Graph& g);
  /// [colors] for every one of n vertices.
  static Palette uniform(std::size_t n, Color colors);
};

/// Empty string if every list is sorted, duplicate-free, positive and has
/// at least deg(v) + 1 entries; otherwise the first problem.
std::string check_list_coloring_input(const Graph& g, const Palette& palette);

/// Lines "v: c1 c2 ...". Vertices not listed get [deg(v) + 1]. Throws ParseError.
Palette read_palette(std::istream& in, const Graph& g);
void write_palette(std::ostream& out, const Palette& palette);

struct ColoringOutput {
  std::vector<Color> color;            // 0 = uncolored
  std::vector<std::uint32_t> fixed_at;  // phase, round or recursion level

  std::size_t colors_used() const;
};

}  // namespace ktsim
