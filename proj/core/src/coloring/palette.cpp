#include "ktsim/coloring/palette.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "ktsim/errors.hpp"

namespace ktsim {

bool Palette::contains(Vertex v, Color c) const {
  return std::binary_search(lists[v].begin(), lists[v].end(), c);
}

Color Palette::max_color() const {
  Color best = 0;
  for (const auto& l : lists)
    if (!l.empty()) best = std::max(best, l.back());
  return best;
}

Palette Palette::degree_plus_one(const Graph& g) {
  Palette p;
  p.lists.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    p.lists[v].resize(g.degree(v) + 1);
    std::iota(p.lists[v].begin(), p.lists[v].end(), Color{1});
  }
  return p;
}

Palette Palette::uniform(std::size_t n, Color colors) {
  std::vector<Color> base(colors);
  std::iota(base.begin(), base.end(), Color{1});
  return Palette{std::vector<std::vector<Color>>(n, base)};
}

std::string check_list_coloring_input(const Graph& g, const Palette& palette) {
  if (palette.size() != g.vertex_count()) return "palette size differs from vertex count";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& l = palette[v];
    if (!l.empty() && l.front() == 0) return fmt::format("vertex {}: color 0 is reserved", v);
    if (std::adjacent_find(l.begin(), l.end(), std::greater_equal<>()) != l.end())
      return fmt::format("vertex {}: list not strictly increasing", v);
    if (l.size() < g.degree(v) + 1)
      return fmt::format("vertex {}: {} colors for degree {}", v, l.size(), g.degree(v));
  }
  return {};
}

Palette read_palette(std::istream& in, const Graph& g) {
  Palette p = Palette::degree_plus_one(g);
  std::vector<bool> seen(g.vertex_count(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(fmt::format("palette line {}: missing ':'", lineno));
    long long v = -1;
    std::istringstream head(line.substr(0, colon));
    if (!(head >> v) || v < 0 || static_cast<std::size_t>(v) >= g.vertex_count() || seen[v])
      throw ParseError(fmt::format("palette line {}: bad or repeated vertex", lineno));
    seen[v] = true;
    std::istringstream rest(line.substr(colon + 1));
    std::vector<Color> list;
    long long c;
    while (rest >> c) {
      if (c < 1) throw ParseError(fmt::format("palette line {}: colors must be >= 1", lineno));
      list.push_back(static_cast<Color>(c));
    }
    if (!rest.eof()) throw ParseError(fmt::format("palette line {}: bad color", lineno));
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    p.lists[v] = std::move(list);
  }
  return p;
}

void write_palette(std::ostream& out, const Palette& palette) {
  for (std::size_t v = 0; v < palette.size(); ++v) {
    out << v << ':';
    for (Color c : palette.lists[v]) out << ' ' << c;
    out << '\n';
  }
}

std::size_t ColoringOutput::colors_used() const {
  std::unordered_set<Color> s;
  for (Color c : color)
    if (c) s.insert(c);
  return s.size();
}

}  // namespace ktsim
