#include "ktsim/coloring/verify.hpp"

#include <fmt/format.h>

namespace ktsim {

namespace {

template <typename Allowed>
Verdict check(const Graph& g, const ColoringOutput& out, Allowed allowed) {
  if (out.color.size() != g.vertex_count()) return Verdict::fail("output size differs from vertex count");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.color[v] == 0) return Verdict::fail(fmt::format("vertex {} uncolored", v));
    if (!allowed(v, out.color[v]))
      return Verdict::fail(fmt::format("vertex {} has color {} outside its palette", v, out.color[v]));
  }
  for (const auto& [u, v] : g.edges())
    if (out.color[u] == out.color[v])
      return Verdict::fail(fmt::format("edge {{{},{}}} monochromatic with color {}", u, v, out.color[u]));
  return Verdict::ok();
}

}  // namespace

Verdict verify_coloring(const Graph& g, const ColoringOutput& out, const Palette& palette) {
  if (palette.size() != g.vertex_count()) return Verdict::fail("palette size differs from vertex count");
  return check(g, out, [&](Vertex v, Color c) { return palette.contains(v, c); });
}

Verdict verify_coloring(const Graph& g, const ColoringOutput& out, Color bound) {
  return check(g, out, [&](Vertex, Color c) { return c >= 1 && c <= bound; });
}

}  // namespace ktsim
